#include <gtest/gtest.h>

#include "osculant/idealprobe.hpp"

using namespace osculant;

namespace {

// Dimensions of the degree-d vanishing space of the closure, computed
// symbolically by tests/oracles/vanishing_dims.py.
constexpr std::size_t kOracleDim[] = {0, 0, 4, 22};

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(MonomialBasis, SizeAndOrder) {
  for (unsigned d = 0; d <= 4; ++d) {
    const MonomialBasis b(d);
    EXPECT_EQ(b.size(), binom(d + 5, 5));
    for (std::size_t i = 0; i < b.size(); ++i) {
      unsigned total = 0;
      for (auto e : b[i]) total += e;
      EXPECT_EQ(total, d);
      if (i > 0) EXPECT_GT(b[i - 1], b[i]);
    }
  }
  EXPECT_EQ(MonomialBasis(2)[0], (Exponent{2, 0, 0, 0, 0, 0}));
  EXPECT_EQ(MonomialBasis(2)[20], (Exponent{0, 0, 0, 0, 0, 2}));
}

TEST(SampleKappaO, Examples) {
  RationalField q;
  const auto one = sample_kappa_O(1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(on_Q_and_J(q, one[0]));
  EXPECT_EQ(kappa_osculating(q, q.zero(), q.zero()), make_klein(q, {1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(kappa_osculating(q, q.one(), q.zero()), make_klein(q, {1, 3, 0, 3, 1, 3}));
}

TEST(SampleKappaO, DistinctDeterministicAndOnTheVariety) {
  RationalField q;
  const auto a = sample_kappa_O(150, 42);
  EXPECT_EQ(a, sample_kappa_O(150, 42));
  EXPECT_NE(a, sample_kappa_O(150, 43));
  std::set<Vec6<Rational>> distinct(a.begin(), a.end());
  EXPECT_EQ(distinct.size(), a.size());
  for (const auto& y : a) {
    EXPECT_TRUE(on_Q_and_J(q, y));
    EXPECT_TRUE(in_kappa_O(KleinPoint<Rational>(y)));
  }
}

TEST(InKappaO, Membership) {
  RationalField q;
  EXPECT_TRUE(in_kappa_O(KleinPoint<Rational>(w_infinity(q))));
  EXPECT_FALSE(in_kappa_O(make_klein(q, {0, 0, 0, 0, 1, 0})));
  EXPECT_FALSE(in_kappa_O(make_klein(q, {0, 0, 0, 0, 1, 5})));
  EXPECT_FALSE(in_kappa_O(make_klein(q, {1, 3, 0, 3, 1, 4})));
  EXPECT_TRUE(in_kappa_O(make_klein(q, {1, 3, 1, 2, 1, 1})));
}

TEST(VanishingSpace, OracleDimensions) {
  EXPECT_EQ(vanishing_space(sample_kappa_O(30, 1), 1).forms.size(), kOracleDim[1]);
  EXPECT_EQ(vanishing_space(sample_kappa_O(60, 7), 2).forms.size(), kOracleDim[2]);
  EXPECT_EQ(vanishing_space(sample_kappa_O(120, 7), 3).forms.size(), kOracleDim[3]);
}

TEST(VanishingSpace, ExactVanishingOnSamples) {
  const auto pts = sample_kappa_O(80, 5);
  const auto vs = vanishing_space(pts, 2);
  for (const auto& f : vs.forms) {
    for (const auto& y : pts) EXPECT_TRUE(vs.basis.evaluate(f, y).is_zero());
  }
}

TEST(VanishingSpace, RankBoundWithFewSamples) {
  const auto vs = vanishing_space(sample_kappa_O(3, 11), 2);
  EXPECT_GE(vs.forms.size(), 21u - 3u);
  EXPECT_EQ(vanishing_space({}, 2).forms.size(), 21u);
}

TEST(VanishingSpace, MonotoneInSamples) {
  const auto pts = sample_kappa_O(70, 3);
  std::size_t prev = MonomialBasis(3).size();
  for (std::size_t n : {1u, 5u, 10u, 20u, 34u, 50u, 70u}) {
    const auto dim = vanishing_space({pts.begin(), pts.begin() + n}, 3).forms.size();
    EXPECT_LE(dim, prev) << n;
    prev = dim;
  }
  EXPECT_EQ(prev, kOracleDim[3]);
}

TEST(VanishingSpace, StableUnderDoubling) {
  RationalField q;
  for (std::uint64_t seed : {7u, 42u, 1000u}) {
    const auto small = vanishing_space(sample_kappa_O(60, seed), 2);
    const auto big = vanishing_space(sample_kappa_O(120, seed), 2);
    ASSERT_EQ(small.forms.size(), big.forms.size());
    for (const auto& f : small.forms) EXPECT_TRUE(in_span(q, big.forms, f));
  }
}

TEST(VanishingSpace, ThreadCountDoesNotMatter) {
  const auto pts = sample_kappa_O(60, 9);
  EXPECT_EQ(vanishing_space(pts, 3, 1).forms, vanishing_space(pts, 3, 4).forms);
}

TEST(KnownQuadrics, AgreeWithTheEvaluators) {
  RationalField q;
  const MonomialBasis b(2);
  const auto known = known_quadrics();
  SampleRng rng(5);
  for (int i = 0; i < 50; ++i) {
    Vec6<Rational> y;
    for (auto& c : y) c = sample_rational(rng, 9);
    EXPECT_EQ(b.evaluate(known[0], y), klein_form(y));
    EXPECT_EQ(b.evaluate(known[1], y), h1_form(q, y));
    EXPECT_EQ(b.evaluate(known[2], y), h2_form(q, y));
    EXPECT_EQ(b.evaluate(known[3], y), h3_form(q, y));
  }
}

TEST(KnownQuadrics, SpanTheDegreeTwoSpaceForEverySeed) {
  RationalField q;
  const auto known = known_quadrics();
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto vs = vanishing_space(sample_kappa_O(40, seed), 2);
    for (const auto& f : known) EXPECT_TRUE(in_span(q, vs.forms, f)) << seed;
    EXPECT_EQ(vs.forms.size(), kOracleDim[2]);
  }
}

TEST(Probe, PencilVanishesAtDegreesTwoAndThree) {
  for (std::uint64_t seed : {7u, 42u}) {
    const auto r2 = pencil_closure_probe(2, 60, seed);
    EXPECT_TRUE(r2.pencil_vanishing);
    EXPECT_TRUE(r2.contains_known_forms);
    EXPECT_EQ(r2.nullspace_dimension, kOracleDim[2]);
    EXPECT_EQ(r2.pencil_points, 22u);
    const auto r3 = pencil_closure_probe(3, 120, seed);
    EXPECT_TRUE(r3.pencil_vanishing);
    EXPECT_EQ(r3.nullspace_dimension, kOracleDim[3]);
    EXPECT_FALSE(r3.witness.has_value());
  }
}

TEST(Probe, WholePencilLineAtDegreeTwo) {
  RationalField q;
  const auto vs = vanishing_space(sample_kappa_O(60, 7), 2);
  for (std::int64_t m = -10; m <= 10; ++m) {
    const auto y = make_klein(q, {0, 0, 0, 0, 1, m}).coords();
    for (const auto& f : vs.forms) EXPECT_TRUE(vs.basis.evaluate(f, y).is_zero()) << m;
  }
}

TEST(Probe, InsufficientSamplesAreDetected) {
  // with too few samples spurious forms survive and some fail on the pencil
  const auto r = pencil_closure_probe(3, 10, 7);
  EXPECT_GT(r.nullspace_dimension, kOracleDim[3]);
  EXPECT_FALSE(r.pencil_vanishing);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(Probe, ReproducibleAndDegreeChecked) {
  EXPECT_EQ(pencil_closure_probe(2, 60, 7), pencil_closure_probe(2, 60, 7));
  EXPECT_EQ(pencil_closure_probe(2, 60, 7, 1), pencil_closure_probe(2, 60, 7, 3));
  for (unsigned d : {0u, 4u}) {
    try {
      pencil_closure_probe(d, 60, 7);
      ADD_FAILURE() << d;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::DegreeOutOfRange);
    }
  }
}

TEST(NonAlgebraicity, WitnessPersists) {
  for (unsigned d : {1u, 2u, 3u}) {
    const auto ev = nonalgebraicity_evidence(d, 40 * d, 7);
    EXPECT_TRUE(ev.holds()) << d;
    EXPECT_TRUE(ev.witness_on_zero_set);
    EXPECT_FALSE(ev.witness_in_kappa_O);
    EXPECT_EQ(ev.forms, kOracleDim[d]);
  }
  const auto ev0 = nonalgebraicity_evidence(0, 10, 7);
  EXPECT_TRUE(ev0.vacuous);
  EXPECT_TRUE(ev0.holds());
}
