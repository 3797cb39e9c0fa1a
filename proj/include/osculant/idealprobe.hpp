#pragma once

// Degree-bounded interpolation of the forms vanishing on the Klein image of
// the osculating tangents over Q. The forms are found as the exact nullspace
// of a monomial evaluation matrix at sampled points, then evaluated on the
// pencil line spanned by e4 and e5.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "osculant/error.hpp"
#include "osculant/klein.hpp"
#include "osculant/linalg.hpp"
#include "osculant/parallel.hpp"
#include "osculant/sampling.hpp"

namespace osculant {

using Exponent = std::array<unsigned, 6>;
using Form = std::vector<Rational>;  // coefficients over a MonomialBasis

/// All degree-d monomials in Y01..Y23, graded-lex: Y01^d first.
class MonomialBasis {
 public:
  explicit MonomialBasis(unsigned degree) : degree_(degree) {
    Exponent e{};
    fill(e, 0, degree);
  }

  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }

  std::size_t index_of(const Exponent& e) const {
    const auto it = std::find(monomials_.begin(), monomials_.end(), e);
    return static_cast<std::size_t>(it - monomials_.begin());
  }

  std::vector<Rational> evaluate_all(const Vec6<Rational>& y) const {
    std::vector<Rational> row;
    row.reserve(size());
    for (const auto& e : monomials_) {
      Rational v(1);
      for (std::size_t j = 0; j < 6; ++j) {
        for (unsigned k = 0; k < e[j]; ++k) v = v * y[j];
      }
      row.push_back(v);
    }
    return row;
  }

  Rational evaluate(const Form& form, const Vec6<Rational>& y) const {
    const auto row = evaluate_all(y);
    Rational sum(0);
    for (std::size_t i = 0; i < size(); ++i) {
      if (!form[i].is_zero()) sum = sum + form[i] * row[i];
    }
    return sum;
  }

 private:
  void fill(Exponent& e, std::size_t var, unsigned left) {
    if (var == 5) {
      e[5] = left;
      monomials_.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = k;
      fill(e, var + 1, left - k);
    }
    e[var] = 0;
  }

  unsigned degree_;
  std::vector<Exponent> monomials_;
};

/// n distinct points kappa_osculating(u1, u2) with pseudorandom parameters of
/// height at most 50.
inline std::vector<Vec6<Rational>> sample_kappa_O(std::size_t n, std::uint64_t seed) {
  RationalField q;
  SampleRng rng(seed);
  std::set<KleinPoint<Rational>> seen;
  std::vector<Vec6<Rational>> out;
  while (out.size() < n) {
    const auto u1 = sample_rational(rng, 50);
    const auto u2 = sample_rational(rng, 50);
    const auto y = kappa_osculating(q, u1, u2);
    if (seen.insert(y).second) out.push_back(y.coords());
  }
  return out;
}

/// True when y is kappa of a line in O: either W_inf or a closed-form
/// osculating image.
inline bool in_kappa_O(const KleinPoint<Rational>& y) {
  RationalField q;
  if (y[0].is_zero()) return y == KleinPoint<Rational>(w_infinity(q));
  // y is canonical, so y[0] == 1 and the parameters can be read off
  const Rational u1 = y[1] / q.from_int(3);
  return y == kappa_osculating(q, u1, y[2]);
}

namespace detail {
// Rescales a homogeneous vector to integer coordinates; this keeps the
// entries of the evaluation matrix integral and elimination cheaper.
inline Vec6<Rational> integral(Vec6<Rational> y) {
  mpz_class l = 1;
  for (const auto& c : y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get().get_den_mpz_t());
  for (auto& c : y) c = c * Rational(l);
  return y;
}
}  // namespace detail

struct VanishingSpace {
  MonomialBasis basis;
  std::vector<Form> forms;
  std::size_t samples = 0;
  std::size_t rank = 0;  // rank of the evaluation matrix
};

/// Basis of the degree-d forms vanishing at every point. Each returned form
/// is evaluated again at every point; a nonzero value is a logic error.
inline VanishingSpace vanishing_space(const std::vector<Vec6<Rational>>& points, unsigned d,
                                      unsigned threads = 1) {
  RationalField q;
  VanishingSpace vs{MonomialBasis(d), {}, points.size(), 0};
  const auto chunks = parallel_chunks(points.size(), threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = lo; i < hi; ++i) rows.push_back(vs.basis.evaluate_all(detail::integral(points[i])));
    return rows;
  });
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : chunks) rows.insert(rows.end(), c.begin(), c.end());
  if (rows.empty()) {
    for (std::size_t i = 0; i < vs.basis.size(); ++i) {
      Form f(vs.basis.size(), Rational(0));
      f[i] = Rational(1);
      vs.forms.push_back(std::move(f));
    }
    return vs;
  }
  vs.forms = nullspace(q, Matrix<Rational>::from_rows(rows, q.zero()));
  vs.rank = vs.basis.size() - vs.forms.size();
  for (const auto& f : vs.forms) {
    for (const auto& row : rows) {
      Rational sum(0);
      for (std::size_t i = 0; i < row.size(); ++i) sum = sum + f[i] * row[i];
      if (!sum.is_zero()) throw std::logic_error("vanishing_space: nullspace form does not vanish");
    }
  }
  return vs;
}

/// k, h1, h2, h3 written over the degree-2 basis.
inline std::array<Form, 4> known_quadrics() {
  const MonomialBasis b(2);
  auto sq = [](std::size_t i, std::size_t j) {
    Exponent e{};
    ++e[i];
    ++e[j];
    return e;
  };
  auto form = [&](std::initializer_list<std::pair<Exponent, long>> terms) {
    Form f(b.size(), Rational(0));
    for (const auto& [e, c] : terms) {
      const auto i = b.index_of(e);
      f[i] = f[i] + Rational(c);
    }
    return f;
  };
  return {
      form({{sq(0, 5), 1}, {sq(1, 4), -1}, {sq(2, 3), 1}}),
      form({{sq(0, 3), 3}, {sq(0, 2), 3}, {sq(1, 1), -1}}),
      form({{sq(1, 4), 3}, {sq(3, 3), -1}, {sq(2, 3), -2}, {sq(2, 2), -1}}),
      form({{sq(0, 4), 9}, {sq(1, 3), -1}, {sq(1, 2), -1}}),
  };
}

/// The 20 sampled points (0,0,0,0,1,m) with distinct nonzero m, then e4 and e5.
inline std::vector<Vec6<Rational>> pencil_sample_points(std::uint64_t seed, std::size_t n = 20) {
  RationalField q;
  SampleRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::set<Rational> used;
  std::vector<Vec6<Rational>> out;
  while (out.size() < n) {
    const auto m = sample_rational(rng, 50);
    if (m.is_zero() || !used.insert(m).second) continue;
    out.push_back({q.zero(), q.zero(), q.zero(), q.zero(), q.one(), m});
  }
  out.push_back(make_klein(q, {0, 0, 0, 0, 1, 0}).coords());
  out.push_back(make_klein(q, {0, 0, 0, 0, 0, 1}).coords());
  return out;
}

struct ProbeReport {
  unsigned degree = 0;
  std::size_t samples = 0;
  std::size_t nullspace_dimension = 0;
  bool contains_known_forms = false;  // only meaningful for degree 2
  bool pencil_vanishing = false;
  std::uint64_t seed = 0;
  std::size_t pencil_points = 0;
  std::optional<Vec6<Rational>> witness;  // a pencil point where some form is nonzero

  friend bool operator==(const ProbeReport&, const ProbeReport&) = default;
};

namespace detail {
inline void require_probe_degree(unsigned d) {
  if (d < 1 || d > 3) throw Error(Errc::DegreeOutOfRange, "degree must be 1, 2 or 3");
}
}  // namespace detail

/// Evaluates every form of `vs` on the pencil sample points for `seed`.
inline ProbeReport pencil_closure_probe(const VanishingSpace& vs, std::uint64_t seed) {
  ProbeReport rep;
  rep.degree = vs.basis.degree();
  rep.samples = vs.samples;
  rep.seed = seed;
  rep.nullspace_dimension = vs.forms.size();
  if (rep.degree == 2) {
    RationalField q;
    const auto known = known_quadrics();
    rep.contains_known_forms =
        std::all_of(known.begin(), known.end(), [&](const Form& f) { return in_span(q, vs.forms, f); }) &&
        rank_of_rows(q, std::vector<Form>(known.begin(), known.end())) == 4;
  }
  const auto pencil = pencil_sample_points(seed);
  rep.pencil_points = pencil.size();
  rep.pencil_vanishing = true;
  for (const auto& y : pencil) {
    for (const auto& f : vs.forms) {
      if (!vs.basis.evaluate(f, y).is_zero()) {
        rep.pencil_vanishing = false;
        rep.witness = y;
        return rep;
      }
    }
  }
  return rep;
}

/// Interpolates the degree-d forms through sampled points of kappa(O) and
/// evaluates each of them on the pencil line.
inline ProbeReport pencil_closure_probe(unsigned d, std::size_t samples, std::uint64_t seed, unsigned threads = 1) {
  detail::require_probe_degree(d);
  return pencil_closure_probe(vanishing_space(sample_kappa_O(samples, seed), d, threads), seed);
}

struct NonAlgebraicityEvidence {
  unsigned degree = 0;
  std::size_t forms = 0;
  Vec6<Rational> witness;
  bool witness_on_zero_set = false;
  bool witness_in_kappa_O = true;
  bool vacuous = false;

  bool holds() const { return vacuous || (witness_on_zero_set && !witness_in_kappa_O); }
};

/// Checks that e4, which is not the image of any line in O, satisfies every
/// form of `vs`. Degree 0 passes vacuously: no nonzero constant vanishes.
inline NonAlgebraicityEvidence nonalgebraicity_evidence(const VanishingSpace& vs) {
  RationalField q;
  NonAlgebraicityEvidence ev;
  ev.degree = vs.basis.degree();
  ev.witness = make_klein(q, {0, 0, 0, 0, 1, 0}).coords();
  ev.witness_in_kappa_O = in_kappa_O(KleinPoint<Rational>(ev.witness));
  if (ev.degree == 0) {
    ev.vacuous = true;
    return ev;
  }
  ev.forms = vs.forms.size();
  ev.witness_on_zero_set =
      std::all_of(vs.forms.begin(), vs.forms.end(), [&](const Form& f) { return vs.basis.evaluate(f, ev.witness).is_zero(); });
  return ev;
}

inline NonAlgebraicityEvidence nonalgebraicity_evidence(unsigned d, std::size_t samples, std::uint64_t seed,
                                                        unsigned threads = 1) {
  if (d != 0) detail::require_probe_degree(d);
  return nonalgebraicity_evidence(vanishing_space(sample_kappa_O(samples, seed), d, threads));
}

}  // namespace osculant
