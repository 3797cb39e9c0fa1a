#include <gtest/gtest.h>

#include <set>

#include "osculant/bwspread.hpp"

using namespace osculant;

namespace {

template <class K>
Params<Elem<K>> params(const K& f, std::int64_t a, std::int64_t b) {
  return {f.from_int(a), f.from_int(b)};
}

template <class Fn>
void expect_errc(Errc code, Fn fn) {
  try {
    fn();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::optional<SpreadRegime> regime_from_verdicts(bool char3, bool partial, bool covering, bool maximal) {
  if (char3) return SpreadRegime::Char3;
  if (!partial) return SpreadRegime::NotPartialSpread;
  if (covering) return SpreadRegime::SpreadAndCovering;
  if (maximal) return SpreadRegime::MaximalPartialNotCovering;
  return std::nullopt;
}

}  // namespace

TEST(OsculatingTangent, PluckerExamples) {
  RationalField q;
  EXPECT_EQ(osculating_tangent(q, q.zero(), q.zero()).line,
            Line<Rational>::through(make_point(q, 1, 0, 0, 0), make_point(q, 0, 1, 0, 0)));
  EXPECT_EQ(osculating_tangent(q, q.zero(), q.zero()).line.plucker(), make_klein(q, {1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(osculating_tangent(q, q.one(), q.one()).line.plucker(), make_klein(q, {1, 3, 1, 2, 1, 1}));
  PrimeField gf3(3);
  EXPECT_EQ(osculating_tangent(gf3, gf3.one(), gf3.one()).line.plucker(), make_klein(gf3, {1, 0, 1, 2, 1, 1}));
}

TEST(BuildO, SizesAndRejection) {
  EXPECT_EQ(build_O(PrimeField(2)).size(), 5u);
  EXPECT_EQ(build_O(PrimeField(3)).size(), 10u);
  EXPECT_EQ(build_O(PrimeField(5)).size(), 26u);
  expect_errc(Errc::InfiniteField, [] { build_O(RationalField{}); });
  PrimeField f(5);
  const auto o = build_O(f);
  for (std::size_t i = 0; i < o.size(); ++i) {
    const auto p = o_member_params(f, i);
    if (p) {
      EXPECT_EQ(o[i], osculating_tangent(f, p->first, p->second).line);
    } else {
      EXPECT_EQ(i, 25u);
      EXPECT_EQ(o[i], g_infinity(f));
    }
  }
}

TEST(SkewCriterion, Examples) {
  RationalField q;
  EXPECT_EQ(skew_criterion(q, q.zero(), q.zero(), q.one(), q.one()), q.one());
  EXPECT_EQ(skew_criterion(q, q.zero(), q.zero(), q.zero(), q.from_int(5)), q.from_int(25));
  PrimeField f(7);
  EXPECT_TRUE(skew_criterion(f, f.zero(), f.zero(), f.one(), f.from_int(4)).is_zero());
  EXPECT_TRUE((f.from_int(2) * f.from_int(2) + f.from_int(2) + f.one()).is_zero());
  expect_errc(Errc::SamePoint, [&] { skew_criterion(q, q.one(), q.one(), q.one(), q.one()); });
}

TEST(PartialSpread, FiniteExamples) {
  const auto gf5 = certify_partial_spread(PrimeField(5));
  EXPECT_TRUE(gf5.holds);
  EXPECT_EQ(gf5.lines, 26u);
  EXPECT_EQ(gf5.pairs_checked, 26u * 25 / 2);
  EXPECT_TRUE(gf5.routes_agree);
  EXPECT_FALSE(gf5.witness.has_value());

  PrimeField f7(7);
  const auto gf7 = certify_partial_spread(f7);
  EXPECT_FALSE(gf7.holds);
  ASSERT_TRUE(gf7.witness.has_value());
  EXPECT_EQ(gf7.witness->first, params(f7, 0, 0));
  EXPECT_EQ(gf7.witness->second, params(f7, 1, 4));
  EXPECT_TRUE(gf7.witness->criterion.is_zero());
  EXPECT_TRUE(gf7.witness->determinant.is_zero());
  EXPECT_TRUE(gf7.witness->lines_meet);
  EXPECT_TRUE(gf7.routes_agree);
  ASSERT_TRUE(gf7.unity_root.has_value());

  PrimeField f13(13);
  const auto gf13 = certify_partial_spread(f13);
  ASSERT_TRUE(gf13.witness.has_value());
  EXPECT_EQ(gf13.witness->second, params(f13, 1, 5));
  const auto replay = replay_skew_witness(f13, gf13.witness->first, gf13.witness->second);
  EXPECT_TRUE(replay.criterion.is_zero());
  EXPECT_TRUE(replay.lines_meet);
}

TEST(PartialSpread, Rationals) {
  const auto cert = certify_partial_spread(RationalField{}, {.seed = 3, .samples = 100});
  EXPECT_TRUE(cert.holds);
  EXPECT_EQ(cert.method, "symbolic");
  EXPECT_FALSE(cert.unity_root.has_value());
  EXPECT_TRUE(cert.routes_agree);
  EXPECT_GT(cert.pairs_checked, 90u);
}

TEST(Covering, FiniteExamples) {
  const auto gf5 = certify_covering(PrimeField(5));
  EXPECT_TRUE(gf5.holds);
  EXPECT_EQ(gf5.points, 156u);
  EXPECT_EQ(gf5.covered, 156u);
  EXPECT_TRUE(gf5.exact_partition);
  EXPECT_TRUE(gf5.analytic_agrees);

  const auto gf2 = certify_covering(PrimeField(2));
  EXPECT_TRUE(gf2.holds);
  EXPECT_EQ(gf2.points, 15u);
  EXPECT_EQ(gf2.incidences, 15u);
  EXPECT_TRUE(gf2.exact_partition);

  PrimeField f3(3);
  const auto gf3 = certify_covering(f3);
  EXPECT_FALSE(gf3.holds);
  ASSERT_TRUE(gf3.witness.has_value());
  EXPECT_EQ(*gf3.witness, make_point(f3, 0, 1, 1, 0));
  EXPECT_FALSE(incidence(*gf3.witness, nucleus_line(f3)));
  EXPECT_FALSE(on_g_infinity(*gf3.witness));
  EXPECT_TRUE(gf3.analytic_agrees);

  const auto gf7 = certify_covering(PrimeField(7));
  EXPECT_FALSE(gf7.holds);
  EXPECT_TRUE(gf7.analytic_agrees);
}

TEST(Covering, Rationals) {
  RationalField q;
  const auto w = uncovered_witness_rational(2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, make_point(q, 1, 0, 0, 2));
  EXPECT_TRUE(covered_by_O(q, make_point(q, 1, 0, 0, 1)));
  EXPECT_FALSE(covered_by_O(q, make_point(q, 1, 0, 0, 3)));
  const auto cert = certify_covering(q);
  EXPECT_FALSE(cert.holds);
  EXPECT_EQ(cert.witness, w);
  EXPECT_TRUE(cert.analytic_agrees);
}

TEST(Maximality, Examples) {
  const auto gf5 = certify_maximality(PrimeField(5));
  EXPECT_TRUE(gf5.holds);
  EXPECT_EQ(gf5.points_checked, 31u);
  EXPECT_TRUE(gf5.exhaustive_agrees);

  RationalField q;
  EXPECT_EQ(omega_cover(q, make_point(q, 0, 1, 6, 7)), params(q, 2, 7));
  PrimeField f2(2);
  EXPECT_EQ(omega_cover(f2, make_point(f2, 0, 1, 1, 1)), params(f2, 1, 1));
  EXPECT_FALSE(omega_cover(q, make_point(q, 0, 0, 1, 3)).has_value());
  EXPECT_TRUE(certify_maximality(q).holds);
  expect_errc(Errc::Char3Unsupported, [] { certify_maximality(PrimeField(3)); });
  expect_errc(Errc::NotInOmega, [&] { omega_cover(q, make_point(q, 1, 0, 0, 0)); });
}

TEST(DualSpread, Examples) {
  const auto gf2 = certify_dual_spread(PrimeField(2));
  EXPECT_TRUE(gf2.holds);
  EXPECT_EQ(gf2.planes, 15u);
  EXPECT_EQ(gf2.exactly_one, 15u);
  const auto gf5 = certify_dual_spread(PrimeField(5));
  EXPECT_TRUE(gf5.holds);
  EXPECT_EQ(gf5.exactly_one, 156u);
  EXPECT_TRUE(gf5.planes_through_z_hit);
  const auto gf7 = certify_dual_spread(PrimeField(7));
  EXPECT_FALSE(gf7.holds);
  ASSERT_TRUE(gf7.witness.has_value());
  EXPECT_NE(gf7.witness_count, 1u);
  EXPECT_THROW(certify_dual_spread(RationalField{}), Error);
}

TEST(BettenChart, Examples) {
  RationalField q;
  const auto c0 = betten_chart(q, q.zero(), q.zero());
  EXPECT_TRUE(c0.t.is_zero());
  EXPECT_TRUE(c0.s.is_zero());
  EXPECT_EQ(c0.plane1, (Vec4<Rational>{0L, 0L, -1L, 0L}));
  EXPECT_EQ(c0.plane2, (Vec4<Rational>{0L, 0L, 0L, -1L}));
  const auto c1 = betten_chart(q, q.one(), q.from_int(3));
  EXPECT_EQ(c1.t, q.zero());
  EXPECT_EQ(c1.s, q.one());
  EXPECT_EQ(c1.plane1, (Vec4<Rational>{0L, 1L, -1L, 0L}));
  EXPECT_EQ(c1.plane2, (Vec4<Rational>{Rational(-1, 3), 1L, 0L, -1L}));
  PrimeField f5(5);
  const auto c5 = betten_chart(f5, f5.one(), f5.zero());
  EXPECT_EQ(c5.t, f5.from_int(4));
  EXPECT_EQ(c5.s, f5.one());
  expect_errc(Errc::Char3Unsupported, [] {
    PrimeField f3(3);
    betten_chart(f3, f3.one(), f3.one());
  });
}

TEST(BettenChart, AlphaImageIsMeetOfChartPlanes) {
  for (std::uint32_t p : {5u, 7u}) {
    PrimeField f(p);
    for (const auto& [u1, u2] : o_parameters(f)) EXPECT_TRUE(betten_chart_consistent(f, u1, u2));
  }
  RationalField q;
  SampleRng rng(5);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(betten_chart_consistent(q, sample_rational(rng, 30), sample_rational(rng, 30)));
}

TEST(Regulus, Examples) {
  PrimeField f2(2);
  const auto r2 = regulus_minus(f2, f2.zero());
  EXPECT_EQ(r2.size(), 3u);
  const auto v2 = verify_regulus(f2, r2);
  EXPECT_TRUE(v2.is_regulus);
  EXPECT_TRUE(v2.opposite.contains(generator(f2, f2.one(), f2.zero())));

  PrimeField f5(5);
  const auto o = build_O(f5);
  for (const auto& s : f5.elements()) {
    const auto r = regulus_minus(f5, s);
    EXPECT_EQ(r.size(), 6u);
    for (const auto& l : r) EXPECT_TRUE(o.contains(l));
    const auto v = verify_regulus(f5, r);
    EXPECT_TRUE(v.is_regulus);
    EXPECT_EQ(v.opposite.size(), 6u);
    EXPECT_TRUE(v.opposite.contains(generator(f5, f5.one(), s)));
  }
  LineSet<Fp> two;
  two.insert(o[0]);
  two.insert(o[1]);
  expect_errc(Errc::NotARegulus, [&] { verify_regulus(f5, two); });
  // three skew lines not from one regulus of O
  LineSet<Fp> mixed;
  mixed.insert(o[0]);
  mixed.insert(o[7]);
  mixed.insert(o[13]);
  EXPECT_FALSE(verify_regulus(f5, mixed).is_regulus);
}

TEST(TransversalMap, Examples) {
  RationalField q;
  EXPECT_EQ(transversal_map(q, make_point(q, 0, 1, 0, 0)), make_point(q, 1, 0, 0, 0));
  EXPECT_EQ(transversal_map(q, make_point(q, 0, 1, 3, 1)), make_point(q, 1, 0, -2, -1));
  expect_errc(Errc::PointOnGInf, [&] { transversal_map(q, make_point(q, 0, 0, 1, 1)); });
  expect_errc(Errc::Char3Unsupported, [] {
    PrimeField f3(3);
    transversal_map(f3, make_point(f3, 0, 1, 0, 0));
  });

  PrimeField f5(5);
  std::set<ProjPoint<Fp>> images;
  const auto x1 = make_plane(f5, 0, 1, 0, 0);
  for (const auto& c : f5.elements()) {
    for (const auto& d : f5.elements()) {
      const ProjPoint<Fp> x({f5.zero(), f5.one(), c, d});
      const auto y = transversal_map(f5, x);
      EXPECT_TRUE(point_in_plane(y, x1));
      EXPECT_FALSE(on_g_infinity(y));
      // y is where the O-line through x meets V(X1)
      const auto cover = omega_cover(f5, x);
      ASSERT_TRUE(cover.has_value());
      EXPECT_EQ(meet_line_plane(osculating_tangent(f5, cover->first, cover->second).line, x1), y);
      images.insert(y);
    }
  }
  EXPECT_EQ(images.size(), 25u);
}

TEST(SpreadInvariants, TangentSectionIsATriplePoint) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (const auto& [u1, u2] : o_parameters(f)) {
      const auto prof = intersect_line_surface(f, osculating_tangent(f, u1, u2).line);
      ASSERT_FALSE(prof.contained);
      ASSERT_EQ(prof.points.size(), 1u);
      EXPECT_EQ(prof.points[0].first, surface_point(f, u1, u2));
      if (p == 3) {
        EXPECT_GE(prof.points[0].second, 3);
      } else {
        EXPECT_EQ(prof.points[0].second, 3);
      }
    }
  }
  RationalField q;
  SampleRng rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto u1 = sample_rational(rng, 50), u2 = sample_rational(rng, 50);
    const auto prof = intersect_line_surface(q, osculating_tangent(q, u1, u2).line);
    ASSERT_EQ(prof.points.size(), 1u);
    EXPECT_EQ(prof.points[0].first, surface_point(q, u1, u2));
    EXPECT_EQ(prof.points[0].second, 3);
  }
}

TEST(SpreadInvariants, TangentsAreSkewToGInf) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (const auto& [u1, u2] : o_parameters(f)) {
      EXPECT_TRUE(lines_skew(osculating_tangent(f, u1, u2).line, g_infinity(f)));
    }
  }
  RationalField q;
  SampleRng rng(9);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(lines_skew(osculating_tangent(q, sample_rational(rng, 50), sample_rational(rng, 50)).line,
                           g_infinity(q)));
  }
}

TEST(SpreadInvariants, CriterionMatchesDeterminantExhaustively) {
  for (std::uint32_t p : {5u, 7u}) {
    PrimeField f(p);
    const auto ps = o_parameters(f);
    for (const auto& v : ps) {
      for (const auto& u : ps) {
        if (v == u) continue;
        const auto crit = skew_criterion(f, v.first, v.second, u.first, u.second);
        ASSERT_EQ(crit, tangent_pair_det(f, v.first, v.second, u.first, u.second));
        ASSERT_EQ(crit.is_zero(), !lines_skew(osculating_tangent(f, v.first, v.second).line,
                                              osculating_tangent(f, u.first, u.second).line));
      }
    }
  }
}

TEST(SpreadInvariants, VerdictsReproduceTheRegime) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
    PrimeField f(p);
    const bool char3 = p == 3;
    const bool partial = certify_partial_spread(f).holds;
    const bool covering = certify_covering(f).holds;
    const bool maximal = char3 ? false : certify_maximality(f).holds;
    EXPECT_EQ(regime_from_verdicts(char3, partial, covering, maximal), classify_field(f)) << p;
    if (!char3) EXPECT_EQ(partial, regime_is_partial_spread(classify_field(f)));
  }
  RationalField q;
  const bool partial = certify_partial_spread(q).holds;
  const bool covering = certify_covering(q).holds;
  const bool maximal = certify_maximality(q).holds;
  EXPECT_EQ(regime_from_verdicts(false, partial, covering, maximal), SpreadRegime::MaximalPartialNotCovering);
}

TEST(SpreadInvariants, SpreadRegimePartitionsThePoints) {
  for (std::uint32_t p : {2u, 5u, 11u}) {
    PrimeField f(p);
    ASSERT_EQ(classify_field(f), SpreadRegime::SpreadAndCovering);
    const auto cov = certify_covering(f);
    const std::uint64_t q = p;
    EXPECT_TRUE(cov.exact_partition);
    EXPECT_EQ(cov.points, q * q * q + q * q + q + 1);
    EXPECT_EQ(cov.incidences, (q * q + 1) * (q + 1));
  }
}

TEST(SpreadInvariants, GroupPermutesTheTangents) {
  PrimeField f(5);
  const auto three = f.from_int(3);
  for (const auto& a : f.elements()) {
    for (const auto& b : f.elements()) {
      const auto m = group_matrix(f, a, b, f.one());
      for (const auto& [u1, u2] : o_parameters(f)) {
        EXPECT_EQ(group_apply(f, m, osculating_tangent(f, u1, u2).line),
                  osculating_tangent(f, u1 + a, u2 + three * a * u1 + b).line);
      }
    }
  }
}

TEST(SpreadInvariants, DualityMapsOOntoItself) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) EXPECT_TRUE(duality_preserves_O(PrimeField(p))) << p;
}

TEST(SpreadInvariants, ThreadCountDoesNotChangeCertificates) {
  PrimeField f(7);
  const auto a = certify_covering(f, {.threads = 1});
  const auto b = certify_covering(f, {.threads = 4});
  EXPECT_EQ(a.covered, b.covered);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.incidences, b.incidences);
  const auto c = certify_partial_spread(f, {.threads = 1});
  const auto d = certify_partial_spread(f, {.threads = 3});
  ASSERT_TRUE(c.witness && d.witness);
  EXPECT_EQ(c.witness->first, d.witness->first);
  EXPECT_EQ(c.witness->second, d.witness->second);
  const auto e = certify_dual_spread(f, {.threads = 1});
  const auto g = certify_dual_spread(f, {.threads = 5});
  EXPECT_EQ(e.witness, g.witness);
  EXPECT_EQ(e.none, g.none);
}
