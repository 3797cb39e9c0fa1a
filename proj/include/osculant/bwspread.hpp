#pragma once

// The line set O of proper osculating tangents of F together with g_inf, and
// the checks that decide whether it is a partial spread, a spread, a maximal
// partial spread or a dual spread. Also the real chart (t, s), the
// transversal map omega \ g_inf -> V(X1) \ g_inf and the reguli inside O.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "osculant/cayley.hpp"
#include "osculant/error.hpp"
#include "osculant/field.hpp"
#include "osculant/parallel.hpp"
#include "osculant/projspace.hpp"
#include "osculant/sampling.hpp"

namespace osculant {

/// Chart parameters (u1, u2) of a point P(u1,u2) of F.
template <class E>
using Params = std::pair<E, E>;

template <class E>
struct OsculatingTangent {
  E u1, u2;
  Line<E> line;
};

struct CertifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 200;  // randomized replays over Q
  unsigned threads = 1;
};

/// (0, 1, 3 u1, u2): where the tangent at P(u1,u2) meets omega.
template <GroundField K>
ProjPoint<Elem<K>> osculating_direction(const K& field, const Elem<K>& u1, const Elem<K>& u2) {
  return ProjPoint<Elem<K>>::from_canonical({field.zero(), field.one(), field.from_int(3) * u1, u2});
}

template <GroundField K>
OsculatingTangent<Elem<K>> osculating_tangent(const K& field, const Elem<K>& u1, const Elem<K>& u2) {
  return {u1, u2, Line<Elem<K>>::through(surface_point(field, u1, u2), osculating_direction(field, u1, u2))};
}

/// All (u1,u2) in lexicographic order.
template <GroundField K>
std::vector<Params<Elem<K>>> o_parameters(const K& field) {
  detail::require_finite(field);
  std::vector<Params<Elem<K>>> out;
  if constexpr (K::is_finite()) {
    const auto elems = field.elements();
    out.reserve(elems.size() * elems.size());
    for (const auto& u1 : elems) {
      for (const auto& u2 : elems) out.emplace_back(u1, u2);
    }
  }
  return out;
}

/// O over a finite field: the q^2 tangents in `o_parameters` order, then g_inf.
template <GroundField K>
LineSet<Elem<K>> build_O(const K& field) {
  LineSet<Elem<K>> out;
  for (const auto& [u1, u2] : o_parameters(field)) out.insert(osculating_tangent(field, u1, u2).line);
  out.insert(g_infinity(field));
  return out;
}

/// Parameters of the i-th member of `build_O`; nothing for g_inf.
template <FiniteGroundField K>
std::optional<Params<Elem<K>>> o_member_params(const K& field, std::size_t index) {
  const std::uint64_t q = field.order();
  if (index >= q * q) return std::nullopt;
  return Params<Elem<K>>{field.from_int(static_cast<std::int64_t>(index / q)),
                         field.from_int(static_cast<std::int64_t>(index % q))};
}

// ---------------------------------------------------------------------------
// Pairwise skewness

/// Moves P(v) to P(0,0) with an element of G and evaluates
/// D2^2 - 3 D1^2 D2 + 3 D1^4 at the image (D1, D2) of P(u). Zero exactly
/// when the two tangents meet.
template <GroundField K>
Elem<K> skew_criterion(const K& field, const Elem<K>& v1, const Elem<K>& v2, const Elem<K>& u1, const Elem<K>& u2) {
  if (v1 == u1 && v2 == u2) throw Error(Errc::SamePoint, "both tangents at P(" + to_string(u1) + "," + to_string(u2) + ")");
  const auto three = field.from_int(3);
  const auto d1 = u1 - v1;
  const auto d2 = u2 - v2 - three * v1 * d1;
  const auto d1sq = d1 * d1;
  return d2 * d2 - three * d1sq * d2 + three * d1sq * d1sq;
}

/// det(P(v), dir(v), P(u), dir(u)) on the representatives with leading 1.
template <GroundField K>
Elem<K> tangent_pair_det(const K& field, const Elem<K>& v1, const Elem<K>& v2, const Elem<K>& u1, const Elem<K>& u2) {
  return det4(field, {surface_point(field, v1, v2).coords(), osculating_direction(field, v1, v2).coords(),
                      surface_point(field, u1, u2).coords(), osculating_direction(field, u1, u2).coords()});
}

template <class E>
struct SkewWitness {
  Params<E> first, second;
  E criterion, determinant;
  bool lines_meet = false;
};

/// Recomputes both routes for a recorded pair.
template <GroundField K>
SkewWitness<Elem<K>> replay_skew_witness(const K& field, const Params<Elem<K>>& a, const Params<Elem<K>>& b) {
  const auto la = osculating_tangent(field, a.first, a.second).line;
  const auto lb = osculating_tangent(field, b.first, b.second).line;
  return {a,
          b,
          skew_criterion(field, a.first, a.second, b.first, b.second),
          tangent_pair_det(field, a.first, a.second, b.first, b.second),
          !lines_skew_polar(la, lb)};
}

template <class E>
struct PartialSpreadCert {
  bool holds = false;
  std::string method;
  std::uint64_t lines = 0;
  std::uint64_t pairs_checked = 0;
  bool routes_agree = true;  // criterion, determinant and polar form
  std::optional<SkewWitness<E>> witness;
  std::optional<E> unity_root;
};

namespace detail {

template <GroundField K>
bool routes_agree_on(const K& field, const Params<Elem<K>>& a, const Params<Elem<K>>& b, bool polar_skew) {
  const auto crit = skew_criterion(field, a.first, a.second, b.first, b.second);
  const auto det = tangent_pair_det(field, a.first, a.second, b.first, b.second);
  return crit == det && crit.is_zero() != polar_skew;
}

}  // namespace detail

/// Finite fields: every pair of O. Over Q: a pair of distinct tangents meets
/// iff D^2 - 3D + 3 = 0 has a root, i.e. iff X^2 + X + 1 does; random pairs
/// are replayed through all three routes on top of that.
template <GroundField K>
PartialSpreadCert<Elem<K>> certify_partial_spread(const K& field, const CertifyOptions& opts = {}) {
  using E = Elem<K>;
  PartialSpreadCert<E> cert;
  cert.unity_root = nontrivial_cube_root_of_unity(field);
  if constexpr (K::is_finite()) {
    cert.method = "exhaustive";
    const auto o = build_O(field);
    cert.lines = o.size();
    const std::size_t n = o.size();
    struct Partial {
      std::uint64_t pairs = 0;
      bool agree = true;
      std::optional<std::pair<std::size_t, std::size_t>> first_bad;
    };
    auto parts = parallel_chunks(n, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      Partial part;
      for (std::size_t i = lo; i < hi; ++i) {
        const auto pi = o_member_params(field, i);
        for (std::size_t j = i + 1; j < n; ++j) {
          ++part.pairs;
          const bool skew = lines_skew_polar(o[i], o[j]);
          const auto pj = o_member_params(field, j);
          if (pi && pj && !detail::routes_agree_on(field, *pi, *pj, skew)) part.agree = false;
          if (!skew && !part.first_bad) part.first_bad = std::pair{i, j};
        }
      }
      return part;
    });
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (const auto& part : parts) {
      cert.pairs_checked += part.pairs;
      cert.routes_agree = cert.routes_agree && part.agree;
      if (!bad && part.first_bad) bad = part.first_bad;
    }
    cert.holds = !bad.has_value();
    if (bad) {
      const auto a = o_member_params(field, bad->first);
      const auto b = o_member_params(field, bad->second);
      // g_inf is skew to every tangent, so a failing pair is two tangents
      if (!a || !b) throw std::logic_error("g_inf meets a tangent");
      cert.witness = replay_skew_witness(field, *a, *b);
    }
  } else {
    cert.method = "symbolic";
    cert.holds = !cert.unity_root.has_value();
    SampleRng rng(opts.seed);
    for (std::uint64_t k = 0; k < opts.samples; ++k) {
      const Params<E> a{sample_rational(rng, 20), sample_rational(rng, 20)};
      const Params<E> b{sample_rational(rng, 20), sample_rational(rng, 20)};
      if (a == b) continue;
      ++cert.pairs_checked;
      const bool skew = lines_skew_polar(osculating_tangent(field, a.first, a.second).line,
                                         osculating_tangent(field, b.first, b.second).line);
      if (!detail::routes_agree_on(field, a, b, skew)) cert.routes_agree = false;
      if (!skew && !cert.witness) {
        cert.witness = replay_skew_witness(field, a, b);
        cert.holds = false;
      }
      // the tangents never meet g_inf
      if (!lines_skew_polar(osculating_tangent(field, a.first, a.second).line, g_infinity(field))) cert.holds = false;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Covering

/// The lines of O through x, found by solving for them: `nullopt` stands for
/// g_inf. An affine point (1,p1,p2,p3) lies on the tangent at
/// P(p1 - s, p2 - 3 (p1 - s) s) for each s with s^3 = p3 - (p1 p2 - p1^3).
template <GroundField K>
std::vector<std::optional<Params<Elem<K>>>> o_lines_through(const K& field, const ProjPoint<Elem<K>>& x) {
  using E = Elem<K>;
  std::vector<std::optional<Params<E>>> out;
  if (!x[0].is_zero()) {
    const auto& p1 = x[1];
    const auto& p2 = x[2];
    const auto& p3 = x[3];  // canonical, so x0 = 1
    const auto three = field.from_int(3);
    for (const auto& s : cube_roots(field, p3 - (p1 * p2 - p1 * p1 * p1))) {
      const E u1 = p1 - s;
      out.emplace_back(Params<E>{u1, p2 - three * u1 * s});
    }
    return out;
  }
  if (on_g_infinity(x)) {
    out.emplace_back(std::nullopt);
    return out;
  }
  // (0, 1, b, c) is the direction (0, 1, 3 u1, u2)
  const auto& b = x[2];
  const auto& c = x[3];
  if (field.characteristic() != 3) {
    out.emplace_back(Params<E>{b * field.from_int(3).inverse(), c});
  } else if constexpr (K::is_finite()) {
    if (b.is_zero()) {
      for (const auto& u1 : field.elements()) out.emplace_back(Params<E>{u1, c});
    }
  }
  return out;
}

template <GroundField K>
bool covered_by_O(const K& field, const ProjPoint<Elem<K>>& x) {
  return !o_lines_through(field, x).empty();
}

/// 0, 1, -1, 2, -2, ..., bound, -bound.
inline std::vector<std::int64_t> height_order(std::int64_t bound) {
  std::vector<std::int64_t> out{0};
  for (std::int64_t h = 1; h <= bound; ++h) {
    out.push_back(h);
    out.push_back(-h);
  }
  return out;
}

/// First point (1,p1,p2,p3) with integer |p_i| <= bound, scanned with p1
/// outermost in `height_order`, that lies on no line of O over Q.
inline std::optional<ProjPoint<Rational>> uncovered_witness_rational(std::int64_t bound) {
  RationalField q;
  const auto order = height_order(bound);
  for (auto p1 : order) {
    for (auto p2 : order) {
      for (auto p3 : order) {
        const auto x = make_point(q, 1, p1, p2, p3);
        if (!covered_by_O(q, x)) return x;
      }
    }
  }
  return std::nullopt;
}

template <class E>
struct CoveringCert {
  bool holds = false;
  std::string method;
  std::uint64_t points = 0;
  std::uint64_t covered = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t multiply_covered = 0;
  std::uint64_t incidences = 0;
  bool exact_partition = false;
  bool analytic_agrees = true;  // incidence scan vs solved line lists
  std::optional<ProjPoint<E>> witness;
};

/// Finite fields: every point of PG(3,q) against every line of O, and the
/// count compared with `o_lines_through`. Over Q the first uncovered point
/// of height <= 2 is the witness.
template <GroundField K>
CoveringCert<Elem<K>> certify_covering(const K& field, const CertifyOptions& opts = {}) {
  using E = Elem<K>;
  CoveringCert<E> cert;
  if constexpr (K::is_finite()) {
    cert.method = "exhaustive";
    const auto o = build_O(field);
    const std::uint64_t total = projective_count(field.order(), 4);
    struct Partial {
      std::uint64_t covered = 0, uncovered = 0, multiple = 0, incidences = 0;
      bool agree = true;
      std::optional<std::uint64_t> first_uncovered;
    };
    auto parts = parallel_chunks(total, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      Partial part;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const auto x = ProjPoint<E>::from_canonical(canonical_at<4>(field, idx));
        std::uint64_t through = 0;
        for (const auto& l : o) through += incidence(x, l);
        part.incidences += through;
        const auto solved = o_lines_through(field, x);
        bool agree = solved.size() == through;
        for (const auto& params : solved) {
          const auto l = params ? osculating_tangent(field, params->first, params->second).line : g_infinity(field);
          agree = agree && incidence(x, l);
        }
        part.agree = part.agree && agree;
        if (through == 0) {
          ++part.uncovered;
          if (!part.first_uncovered) part.first_uncovered = idx;
        } else {
          ++part.covered;
          if (through > 1) ++part.multiple;
        }
      }
      return part;
    });
    std::optional<std::uint64_t> first;
    for (const auto& part : parts) {
      cert.covered += part.covered;
      cert.uncovered += part.uncovered;
      cert.multiply_covered += part.multiple;
      cert.incidences += part.incidences;
      cert.analytic_agrees = cert.analytic_agrees && part.agree;
      if (!first && part.first_uncovered) first = part.first_uncovered;
    }
    cert.points = total;
    cert.holds = cert.uncovered == 0;
    cert.exact_partition = cert.holds && cert.multiply_covered == 0;
    if (first) cert.witness = ProjPoint<E>::from_canonical(canonical_at<4>(field, *first));
  } else {
    cert.method = "analytic";
    cert.witness = uncovered_witness_rational(2);
    cert.holds = !cert.witness.has_value();
    SampleRng rng(opts.seed);
    // replay: solved lines really pass through random points
    for (std::uint64_t k = 0; k < opts.samples; ++k) {
      const auto x = ProjPoint<E>({field.one(), sample_rational(rng, 20), sample_rational(rng, 20),
                                   sample_rational(rng, 20)});
      ++cert.points;
      const auto solved = o_lines_through(field, x);
      for (const auto& params : solved) {
        cert.analytic_agrees =
            cert.analytic_agrees && incidence(x, osculating_tangent(field, params->first, params->second).line);
      }
      cert.analytic_agrees = cert.analytic_agrees && solved.size() <= 1;
      if (solved.empty()) {
        ++cert.uncovered;
      } else {
        ++cert.covered;
      }
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Maximality: every point of omega is on a line of O

/// The line of O through a point of omega: `nullopt` is g_inf.
template <GroundField K>
std::optional<Params<Elem<K>>> omega_cover(const K& field, const ProjPoint<Elem<K>>& x) {
  if (field.characteristic() == 3) throw Error(Errc::Char3Unsupported, "3 is not invertible");
  if (!x[0].is_zero()) throw Error(Errc::NotInOmega, to_string(x));
  if (on_g_infinity(x)) return std::nullopt;
  return Params<Elem<K>>{x[2] * field.from_int(3).inverse(), x[3]};
}

template <class E>
struct MaximalityCert {
  bool holds = false;
  std::string method;
  std::uint64_t points_checked = 0;
  bool exhaustive_agrees = true;
  std::optional<ProjPoint<E>> witness;
};

namespace detail {

template <GroundField K>
bool omega_cover_checks(const K& field, const ProjPoint<Elem<K>>& x) {
  const auto c = omega_cover(field, x);
  const auto l = c ? osculating_tangent(field, c->first, c->second).line : g_infinity(field);
  return incidence(x, l);
}

}  // namespace detail

/// A line skew to all of O would meet omega in a point on no line of O, so
/// a covered omega makes a partial spread O maximal.
template <GroundField K>
MaximalityCert<Elem<K>> certify_maximality(const K& field, const CertifyOptions& opts = {}) {
  using E = Elem<K>;
  if (field.characteristic() == 3) throw Error(Errc::Char3Unsupported, "maximality needs 3 invertible");
  MaximalityCert<E> cert;
  cert.holds = true;
  auto check = [&](const ProjPoint<E>& x) {
    ++cert.points_checked;
    if (!detail::omega_cover_checks(field, x)) {
      cert.holds = false;
      if (!cert.witness) cert.witness = x;
    }
  };
  if constexpr (K::is_finite()) {
    cert.method = "constructive+exhaustive";
    const auto o = build_O(field);
    for_each_canonical<3>(field, [&](const std::array<E, 3>& c) {
      const ProjPoint<E> x({field.zero(), c[0], c[1], c[2]});
      check(x);
      std::size_t through = 0;
      for (const auto& l : o) through += incidence(x, l);
      if (through == 0) cert.exhaustive_agrees = false;
    });
    cert.exhaustive_agrees = cert.exhaustive_agrees && cert.holds;
  } else {
    cert.method = "constructive";
    const auto order = height_order(4);
    std::set<ProjPoint<E>> seen;
    for (auto a : order) {
      for (auto b : order) {
        for (auto c : order) {
          if (a == 0 && b == 0 && c == 0) continue;
          const auto x = make_point(field, 0, a, b, c);
          if (seen.insert(x).second) check(x);
        }
      }
    }
    SampleRng rng(opts.seed);
    for (std::uint64_t k = 0; k < opts.samples; ++k) {
      check(ProjPoint<E>({field.zero(), field.one(), sample_rational(rng, 50), sample_rational(rng, 50)}));
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Dual spread

template <class E>
struct DualSpreadCert {
  bool holds = false;  // each plane contains exactly one line of O
  std::uint64_t planes = 0;
  std::uint64_t exactly_one = 0;
  std::uint64_t none = 0;
  std::uint64_t several = 0;
  bool planes_through_z_hit = false;  // each plane through Z contains a line of O
  std::optional<ProjPlane<E>> witness;
  std::uint64_t witness_count = 0;
};

template <GroundField K>
DualSpreadCert<Elem<K>> certify_dual_spread(const K& field, const CertifyOptions& opts = {}) {
  using E = Elem<K>;
  detail::require_finite(field);
  DualSpreadCert<E> cert;
  if constexpr (K::is_finite()) {
    const auto o = build_O(field);
    const auto z = pinch_point(field);
    const std::uint64_t total = projective_count(field.order(), 4);
    struct Partial {
      std::uint64_t one = 0, none = 0, several = 0;
      bool z_hit = true;
      std::optional<std::pair<std::uint64_t, std::uint64_t>> first_bad;
    };
    auto parts = parallel_chunks(total, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      Partial part;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const auto e = ProjPlane<E>::from_canonical(canonical_at<4>(field, idx));
        std::uint64_t inside = 0;
        for (const auto& l : o) inside += line_in_plane(l, e);
        if (inside == 1) {
          ++part.one;
        } else {
          inside == 0 ? ++part.none : ++part.several;
          if (!part.first_bad) part.first_bad = std::pair{idx, inside};
        }
        if (point_in_plane(z, e) && inside == 0) part.z_hit = false;
      }
      return part;
    });
    cert.planes = total;
    cert.planes_through_z_hit = true;
    for (const auto& part : parts) {
      cert.exactly_one += part.one;
      cert.none += part.none;
      cert.several += part.several;
      cert.planes_through_z_hit = cert.planes_through_z_hit && part.z_hit;
      if (!cert.witness && part.first_bad) {
        cert.witness = ProjPlane<E>::from_canonical(canonical_at<4>(field, part.first_bad->first));
        cert.witness_count = part.first_bad->second;
      }
    }
    cert.holds = cert.exactly_one == total;
  }
  return cert;
}

/// The image of O under the duality of F is O again (checked line by line).
template <GroundField K>
bool duality_preserves_O(const K& field) {
  const auto o = build_O(field);
  for (const auto& l : o) {
    if (!o.contains(dual_line(field, l))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The chart (t, s) and the map alpha

template <class E>
struct BettenChart {
  E t, s;
  Vec4<E> plane1;  // u = t x + s y
  Vec4<E> plane2;  // v = -(s^3/3) x + (s^2 + t) y
};

/// s = u1, t = u2/3 - u1^2. Requires 3 invertible.
template <GroundField K>
BettenChart<Elem<K>> betten_chart(const K& field, const Elem<K>& u1, const Elem<K>& u2) {
  if (field.characteristic() == 3) throw Error(Errc::Char3Unsupported, "the chart divides by 3");
  const auto third = field.from_int(3).inverse();
  const auto s = u1;
  const auto t = u2 * third - u1 * u1;
  const auto z = field.zero();
  return {t, s, {t, s, -field.one(), z}, {-(s * s * s) * third, s * s + t, z, -field.one()}};
}

/// alpha: (x0, x1, x2, x3) -> (x0, x1, x2/3, x3/3).
template <GroundField K>
ProjPoint<Elem<K>> betten_alpha(const K& field, const ProjPoint<Elem<K>>& x) {
  if (field.characteristic() == 3) throw Error(Errc::Char3Unsupported, "alpha divides by 3");
  const auto third = field.from_int(3).inverse();
  return ProjPoint<Elem<K>>({x[0], x[1], x[2] * third, x[3] * third});
}

/// The alpha-image of the tangent at P(u1,u2) is the meet of the two chart planes.
template <GroundField K>
bool betten_chart_consistent(const K& field, const Elem<K>& u1, const Elem<K>& u2) {
  const auto chart = betten_chart(field, u1, u2);
  const auto tangent = osculating_tangent(field, u1, u2).line;
  const auto image = Line<Elem<K>>::through(betten_alpha(field, tangent.first()), betten_alpha(field, tangent.second()));
  return image == line_of_planes(field, ProjPlane<Elem<K>>(chart.plane1), ProjPlane<Elem<K>>(chart.plane2));
}

// ---------------------------------------------------------------------------
// Transversal map

/// omega \ g_inf -> V(X1) \ g_inf along the lines of O:
/// (0,1,c,d) -> (1, 0, u2 - 3 u1^2, -u1^3) with u1 = c/3, u2 = d.
template <GroundField K>
ProjPoint<Elem<K>> transversal_map(const K& field, const ProjPoint<Elem<K>>& x) {
  if (field.characteristic() == 3) throw Error(Errc::Char3Unsupported, "the map divides by 3");
  if (!x[0].is_zero()) throw Error(Errc::NotInOmega, to_string(x));
  if (on_g_infinity(x)) throw Error(Errc::PointOnGInf, to_string(x));
  const auto u1 = x[2] * field.from_int(3).inverse();
  const auto& u2 = x[3];
  return ProjPoint<Elem<K>>({field.one(), field.zero(), u2 - field.from_int(3) * u1 * u1, -(u1 * u1 * u1)});
}

// ---------------------------------------------------------------------------
// Reguli

/// R^-(s): the tangents at the points P(s, s^2 + t) of g(1,s), and g_inf.
template <GroundField K>
LineSet<Elem<K>> regulus_minus(const K& field, const Elem<K>& s) {
  detail::require_finite(field);
  LineSet<Elem<K>> out;
  if constexpr (K::is_finite()) {
    for (const auto& t : field.elements()) out.insert(osculating_tangent(field, s, s * s + t).line);
  }
  out.insert(g_infinity(field));
  return out;
}

/// Every line of PG(3,q) meeting all members of `ls`.
template <GroundField K>
LineSet<Elem<K>> transversals(const K& field, const LineSet<Elem<K>>& ls) {
  LineSet<Elem<K>> out;
  for (const auto& l : enumerate_lines(field)) {
    bool meets_all = true;
    for (const auto& m : ls) {
      if (lines_skew_polar(l, m)) {
        meets_all = false;
        break;
      }
    }
    if (meets_all) out.insert(l);
  }
  return out;
}

template <class E>
bool pairwise_skew(const LineSet<E>& ls) {
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (!lines_skew_polar(ls[i], ls[j])) return false;
    }
  }
  return true;
}

template <class E>
struct RegulusCheck {
  bool is_regulus = false;
  LineSet<E> opposite;
};

/// A set of q+1 pairwise skew lines is a regulus iff its transversals are
/// q+1 pairwise skew lines whose own transversals give the set back.
template <GroundField K>
RegulusCheck<Elem<K>> verify_regulus(const K& field, const LineSet<Elem<K>>& ls) {
  detail::require_finite(field);
  if (ls.size() < 3) throw Error(Errc::NotARegulus, "fewer than three lines");
  RegulusCheck<Elem<K>> out;
  if constexpr (K::is_finite()) {
    const std::uint64_t q1 = field.order() + 1;
    out.opposite = transversals(field, ls);
    out.is_regulus = ls.size() == q1 && pairwise_skew(ls) && out.opposite.size() == q1 &&
                     pairwise_skew(out.opposite) && transversals(field, out.opposite) == ls;
  }
  return out;
}

}  // namespace osculant
