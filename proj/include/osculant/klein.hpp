#pragma once

// Lines of PG(3,K) as points of the Klein quadric Q in PG(5,K): the images
// of O and of the generators, the subspaces C, C-perp, B, D around them, the
// quadrics h1, h2, h3 cutting out kappa(O) together with a pencil of lines,
// and the characteristic 3 picture where kappa(O) lies in a quadratic cone.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "osculant/bwspread.hpp"
#include "osculant/cayley.hpp"
#include "osculant/error.hpp"
#include "osculant/field.hpp"
#include "osculant/linalg.hpp"
#include "osculant/parallel.hpp"
#include "osculant/projspace.hpp"

namespace osculant {

// Pluecker index: 01->0 02->1 03->2 12->3 13->4 23->5

template <GroundField K>
Elem<K> h1_form(const K& field, const Vec6<Elem<K>>& y) {
  return field.from_int(3) * y[0] * (y[3] + y[2]) - y[1] * y[1];
}

template <GroundField K>
Elem<K> h2_form(const K& field, const Vec6<Elem<K>>& y) {
  const auto s = y[3] + y[2];
  return field.from_int(3) * y[1] * y[4] - s * s;
}

template <GroundField K>
Elem<K> h3_form(const K& field, const Vec6<Elem<K>>& y) {
  return field.from_int(9) * y[0] * y[4] - y[1] * (y[3] + y[2]);
}

/// y is on J = V(h1, h2, h3), a cone with vertex C-perp.
template <GroundField K>
bool in_J(const K& field, const Vec6<Elem<K>>& y) {
  return h1_form(field, y).is_zero() && h2_form(field, y).is_zero() && h3_form(field, y).is_zero();
}

/// y is on Q intersected with J.
template <GroundField K>
bool on_Q_and_J(const K& field, const Vec6<Elem<K>>& y) {
  return klein_form(y).is_zero() && in_J(field, y);
}

template <class E>
KleinPoint<E> kappa(const Line<E>& l) {
  return l.plucker();
}

/// Closed form of kappa(osculating_tangent(u1,u2)).
template <GroundField K>
KleinPoint<Elem<K>> kappa_osculating(const K& field, const Elem<K>& u1, const Elem<K>& u2) {
  const auto u1sq = u1 * u1;
  if (field.characteristic() == 3) {
    return KleinPoint<Elem<K>>::from_canonical({field.one(), field.zero(), u2, -u2, u1sq * u1, u2 * u2});
  }
  const auto three = field.from_int(3);
  return KleinPoint<Elem<K>>::from_canonical({field.one(), three * u1, u2, three * u1sq - u2, u1sq * u1,
                                              three * u1sq * u1sq - three * u1sq * u2 + u2 * u2});
}

/// kappa(g(s0,s1)) = (0, s0^3, s0^2 s1, s0^2 s1, s0 s1^2, s1^3).
template <GroundField K>
KleinPoint<Elem<K>> generator_cubic(const K& field, const Elem<K>& s0, const Elem<K>& s1) {
  if (s0.is_zero() && s1.is_zero()) throw Error(Errc::ZeroParameters, "generator_cubic(0,0)");
  const auto a = s0 * s0 * s0, b = s0 * s0 * s1, c = s0 * s1 * s1, d = s1 * s1 * s1;
  return KleinPoint<Elem<K>>({field.zero(), a, b, b, c, d});
}

/// v0..v3 with generator_cubic(s0,s1) = s0^3 v0 + s0^2 s1 v1 + s0 s1^2 v2 + s1^3 v3.
template <GroundField K>
std::array<Vec6<Elem<K>>, 4> twisted_cubic_basis(const K& field) {
  std::array<Vec6<Elem<K>>, 4> v;
  // the coordinates of generator_cubic that carry each monomial
  const auto z = field.zero(), o = field.one();
  v[0] = {z, o, z, z, z, z};
  v[1] = {z, z, o, o, z, z};
  v[2] = {z, z, z, z, o, z};
  v[3] = {z, z, z, z, z, o};
  return v;
}

// ---------------------------------------------------------------------------
// Subspaces of PG(5,K)

/// A projective subspace given by linear equations.
template <class E>
struct KleinSubspace {
  std::string name;
  std::vector<Vec6<E>> equations;

  bool contains(const Vec6<E>& y) const {
    for (const auto& eq : equations) {
      E acc = y[0] * eq[0];
      for (std::size_t i = 1; i < 6; ++i) acc = acc + y[i] * eq[i];
      if (!acc.is_zero()) return false;
    }
    return true;
  }
};

namespace detail {

template <GroundField K>
Vec6<Elem<K>> unit6(const K& field, std::size_t i) {
  Vec6<Elem<K>> v;
  v.fill(field.zero());
  v[i] = field.one();
  return v;
}

template <GroundField K>
std::vector<Vec6<Elem<K>>> to_vec6(const std::vector<std::vector<Elem<K>>>& rows) {
  std::vector<Vec6<Elem<K>>> out;
  for (const auto& r : rows) {
    Vec6<Elem<K>> v;
    std::copy(r.begin(), r.end(), v.begin());
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Vector-space basis of the subspace.
template <GroundField K>
std::vector<Vec6<Elem<K>>> subspace_basis(const K& field, const KleinSubspace<Elem<K>>& s) {
  if (s.equations.empty()) {
    std::vector<Vec6<Elem<K>>> all;
    for (std::size_t i = 0; i < 6; ++i) all.push_back(detail::unit6(field, i));
    return all;
  }
  return detail::to_vec6<K>(nullspace(field, Matrix<Elem<K>>::from_rows(s.equations, field.zero())));
}

/// The subspace spanned by the given vectors.
template <GroundField K>
KleinSubspace<Elem<K>> span_of(const K& field, std::string name, const std::vector<Vec6<Elem<K>>>& vectors) {
  return {std::move(name), detail::to_vec6<K>(nullspace(field, Matrix<Elem<K>>::from_rows(vectors, field.zero())))};
}

/// Projective dimension.
template <GroundField K>
int subspace_dimension(const K& field, const KleinSubspace<Elem<K>>& s) {
  return static_cast<int>(subspace_basis(field, s).size()) - 1;
}

template <GroundField K>
bool same_subspace(const K& field, const KleinSubspace<Elem<K>>& a, const KleinSubspace<Elem<K>>& b) {
  const auto ba = subspace_basis(field, a);
  const auto bb = subspace_basis(field, b);
  if (ba.size() != bb.size()) return false;
  return std::all_of(ba.begin(), ba.end(), [&](const auto& v) { return b.contains(v); });
}

template <GroundField K>
bool subspace_within(const K& field, const KleinSubspace<Elem<K>>& inner, const KleinSubspace<Elem<K>>& outer) {
  const auto basis = subspace_basis(field, inner);
  return std::all_of(basis.begin(), basis.end(), [&](const auto& v) { return outer.contains(v); });
}

/// Gram matrix of the polar form of k.
template <GroundField K>
std::array<Vec6<Elem<K>>, 6> klein_gram(const K& field) {
  std::array<Vec6<Elem<K>>, 6> g;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      g[i][j] = klein_polar(detail::unit6(field, i), detail::unit6(field, j));
    }
  }
  return g;
}

/// The polar subspace with respect to the Klein quadric.
template <GroundField K>
KleinSubspace<Elem<K>> polar_subspace(const K& field, const KleinSubspace<Elem<K>>& s, std::string name) {
  const auto gram = klein_gram(field);
  KleinSubspace<Elem<K>> out{std::move(name), {}};
  for (const auto& v : subspace_basis(field, s)) {
    Vec6<Elem<K>> eq;
    for (std::size_t i = 0; i < 6; ++i) {
      eq[i] = field.zero();
      for (std::size_t j = 0; j < 6; ++j) eq[i] = eq[i] + gram[i][j] * v[j];
    }
    out.equations.push_back(eq);
  }
  return out;
}

/// C = V(Y01, Y03 - Y12).
template <GroundField K>
KleinSubspace<Elem<K>> subspace_C(const K& field) {
  const auto z = field.zero(), o = field.one();
  return {"C", {{o, z, z, z, z, z}, {z, z, o, -o, z, z}}};
}

/// B = V(Y03, Y23).
template <GroundField K>
KleinSubspace<Elem<K>> subspace_B(const K& field) {
  const auto z = field.zero(), o = field.one();
  return {"B", {{z, z, o, z, z, z}, {z, z, z, z, z, o}}};
}

/// D = V(Y02, Y03 + Y12).
template <GroundField K>
KleinSubspace<Elem<K>> subspace_D(const K& field) {
  const auto z = field.zero(), o = field.one();
  return {"D", {{z, o, z, z, z, z}, {z, z, o, o, z, z}}};
}

/// W_inf = kappa(g_inf).
template <GroundField K>
Vec6<Elem<K>> w_infinity(const K& field) {
  return detail::unit6(field, 5);
}

/// w = (0,0,1,-1,0,0).
template <GroundField K>
Vec6<Elem<K>> w_vector(const K& field) {
  auto v = detail::unit6(field, 2);
  v[3] = -field.one();
  return v;
}

template <GroundField K>
KleinSubspace<Elem<K>> subspace_Cperp(const K& field) {
  return polar_subspace(field, subspace_C(field), "Cperp");
}

template <GroundField K>
KleinSubspace<Elem<K>> subspace_Dperp(const K& field) {
  return polar_subspace(field, subspace_D(field), "Dperp");
}

/// The line of PG(5,K) carrying kappa of the pencil L[Z, omega].
template <GroundField K>
KleinSubspace<Elem<K>> pencil_klein_line(const K& field) {
  return span_of(field, "PencilLine", {detail::unit6(field, 4), w_infinity(field)});
}

// ---------------------------------------------------------------------------
// The pencil L[Z, omega]

/// The line joining Z with (0, a0, a1, 0); (1:0) runs over the pencil minus g_inf.
template <GroundField K>
Line<Elem<K>> pencil_line(const K& field, const Elem<K>& a0, const Elem<K>& a1) {
  if (a0.is_zero() && a1.is_zero()) throw Error(Errc::ZeroParameters, "pencil_line(0,0)");
  return Line<Elem<K>>::through(pinch_point(field), ProjPoint<Elem<K>>({field.zero(), a0, a1, field.zero()}));
}

/// All lines through Z in omega: g_inf first, then Z(0,1,a,0) for a in F.
template <GroundField K>
LineSet<Elem<K>> pencil_LZomega(const K& field) {
  detail::require_finite(field);
  LineSet<Elem<K>> out;
  out.insert(g_infinity(field));
  if constexpr (K::is_finite()) {
    for (const auto& a : field.elements()) out.insert(pencil_line(field, field.one(), a));
  }
  return out;
}

/// O together with the pencil, as Klein images.
template <GroundField K>
std::set<KleinPoint<Elem<K>>> kappa_O_and_pencil(const K& field) {
  std::set<KleinPoint<Elem<K>>> out;
  for (const auto& l : build_O(field)) out.insert(kappa(l));
  for (const auto& l : pencil_LZomega(field)) out.insert(kappa(l));
  return out;
}

// ---------------------------------------------------------------------------
// The variety J = V(h1, h2, h3, k)

template <class E>
struct VarietyReport {
  std::uint64_t candidates = 0;      // points of PG(5,q) scanned
  std::uint64_t variety_points = 0;  // points of Q n J
  std::uint64_t target_points = 0;   // |kappa(O u pencil)|
  std::uint64_t expected = 0;        // q^2 + q + 1
  bool equal = false;
  std::optional<KleinPoint<E>> extra;    // in J, not an image
  std::optional<KleinPoint<E>> missing;  // an image not in J
};

/// Scans all of PG(5,q) and compares J with kappa(O u L[Z,omega]) as sets.
template <GroundField K>
VarietyReport<Elem<K>> verify_variety_equality(const K& field, unsigned threads = 1) {
  using E = Elem<K>;
  detail::require_finite(field);
  if (field.characteristic() == 3) throw Error(Errc::Char3Unsupported, "the forms degenerate in characteristic 3");
  VarietyReport<E> rep;
  if constexpr (K::is_finite()) {
    const std::uint64_t total = projective_count(field.order(), 6);
    auto parts = parallel_chunks(total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<KleinPoint<E>> found;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const auto y = canonical_at<6>(field, idx);
        if (on_Q_and_J(field, y)) found.push_back(KleinPoint<E>::from_canonical(y));
      }
      return found;
    });
    std::set<KleinPoint<E>> variety;
    for (const auto& part : parts) variety.insert(part.begin(), part.end());
    const auto target = kappa_O_and_pencil(field);
    const std::uint64_t q = field.order();
    rep.candidates = total;
    rep.variety_points = variety.size();
    rep.target_points = target.size();
    rep.expected = q * q + q + 1;
    rep.equal = variety == target;
    for (const auto& y : variety) {
      if (!target.count(y)) {
        rep.extra = y;
        break;
      }
    }
    for (const auto& y : target) {
      if (!variety.count(y)) {
        rep.missing = y;
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Projection from C-perp onto B

/// The unique point of (y + span{w, W_inf}) in B: (y01, y02, 0, y12 + y03, y13, 0).
template <GroundField K>
KleinPoint<Elem<K>> project_through_Cperp(const K& field, const KleinPoint<Elem<K>>& y) {
  const auto& c = y.coords();
  const Vec6<Elem<K>> image{c[0], c[1], field.zero(), c[3] + c[2], c[4], field.zero()};
  if (std::all_of(image.begin(), image.end(), [](const auto& x) { return x.is_zero(); })) {
    throw Error(Errc::ProjectionDegenerate, to_string(y) + " lies in C-perp");
  }
  return KleinPoint<Elem<K>>(image);
}

/// (1, 3s, 0, 3s^2, s^3, 0).
template <GroundField K>
KleinPoint<Elem<K>> projected_cubic(const K& field, const Elem<K>& s) {
  const auto three = field.from_int(3);
  return KleinPoint<Elem<K>>({field.one(), three * s, field.zero(), three * s * s, s * s * s, field.zero()});
}

// ---------------------------------------------------------------------------
// Characteristic 3

template <class E>
struct CongruenceReport {
  bool images_in_QD = false;           // kappa(O u pencil) inside Q n D
  std::uint64_t congruence_lines = 0;  // |N|
  bool all_meet_n = false;
  bool equals_O_and_pencil = false;
  bool cubing_surjective = false;
  std::uint64_t qd_points = 0;  // points of Q n D in PG(5,q)
  std::uint64_t expected = 0;   // q^2 + q + 1
  KleinPoint<E> kappa_n;
  bool kappa_n_is_vertex = false;
  std::optional<Line<E>> witness;  // a line of N off n, or in exactly one of N and O u pencil
  bool holds() const {
    return images_in_QD && all_meet_n && equals_O_and_pencil && qd_points == expected &&
           congruence_lines == expected && kappa_n_is_vertex;
  }
};

template <GroundField K>
CongruenceReport<Elem<K>> char3_congruence_check(const K& field, unsigned threads = 1) {
  using E = Elem<K>;
  if (field.characteristic() != 3) throw Error(Errc::WrongCharacteristic, field.name() + " is not of characteristic 3");
  detail::require_finite(field);
  const auto d = subspace_D(field);
  const auto n = nucleus_line(field);
  CongruenceReport<E> rep{.kappa_n = kappa(n)};
  if constexpr (K::is_finite()) {
    const auto target = kappa_O_and_pencil(field);
    rep.images_in_QD = std::all_of(target.begin(), target.end(), [&](const auto& y) {
      return d.contains(y.coords()) && klein_form(y.coords()).is_zero();
    });
    LineSet<E> congruence;
    for (const auto& l : enumerate_lines(field)) {
      if (d.contains(kappa(l).coords())) congruence.insert(l);
    }
    rep.congruence_lines = congruence.size();
    rep.all_meet_n = true;
    for (const auto& l : congruence) {
      if (lines_skew_polar(l, n)) {
        rep.all_meet_n = false;
        if (!rep.witness) rep.witness = l;
      }
    }
    rep.equals_O_and_pencil = congruence.keys() == target;
    if (!rep.equals_O_and_pencil && !rep.witness) {
      for (const auto& l : congruence) {
        if (!target.count(kappa(l))) {
          rep.witness = l;
          break;
        }
      }
    }
    rep.cubing_surjective = cube_root_profile(field).cubing_surjective;
    const std::uint64_t total = projective_count(field.order(), 6);
    auto parts = parallel_chunks(total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t count = 0;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const auto y = canonical_at<6>(field, idx);
        count += d.contains(y) && klein_form(y).is_zero();
      }
      return count;
    });
    for (auto c : parts) rep.qd_points += c;
    const std::uint64_t q = field.order();
    rep.expected = q * q + q + 1;
    // the vertex of the cone Q n D: kappa(n) in D with D inside its polar hyperplane
    const auto vertex_polar = polar_subspace(field, span_of(field, "n", {rep.kappa_n.coords()}), "n-perp");
    rep.kappa_n_is_vertex = d.contains(rep.kappa_n.coords()) && subspace_within(field, d, vertex_polar);
  }
  return rep;
}

template <class E>
struct OsculatingPlaneReport {
  std::uint64_t points_checked = 0;
  std::uint64_t planes_containing_axis = 0;
  bool axis_is_Dperp = false;
  std::optional<E> witness;  // a parameter s whose plane misses the axis
  bool holds() const { return axis_is_Dperp && planes_containing_axis == points_checked; }
};

namespace detail {

/// r-th formal derivative of sum_k s^k v_k at s.
template <GroundField K>
Vec6<Elem<K>> cubic_derivative(const K& field, const std::array<Vec6<Elem<K>>, 4>& v, const Elem<K>& s, int r) {
  Vec6<Elem<K>> out;
  out.fill(field.zero());
  for (int k = r; k <= 3; ++k) {
    std::int64_t falling = 1;
    for (int i = 0; i < r; ++i) falling *= k - i;
    Elem<K> coeff = field.from_int(falling);
    for (int i = 0; i < k - r; ++i) coeff = coeff * s;
    for (std::size_t j = 0; j < 6; ++j) out[j] = out[j] + coeff * v[static_cast<std::size_t>(k)][j];
  }
  return out;
}

template <GroundField K>
bool plane_contains_axis(const K& field, const std::vector<Vec6<Elem<K>>>& plane, const Vec6<Elem<K>>& a,
                         const Vec6<Elem<K>>& b) {
  return rank_of_rows(field, plane) == 3 && in_span(field, plane, a) && in_span(field, plane, b);
}

}  // namespace detail

/// The osculating planes of the generator cubic all contain span{v1, v2},
/// which is D-perp; formal derivatives keep this valid in characteristic 3.
template <GroundField K>
OsculatingPlaneReport<Elem<K>> osculating_plane_pencil_check(const K& field) {
  using E = Elem<K>;
  if (field.characteristic() != 3) throw Error(Errc::WrongCharacteristic, field.name() + " is not of characteristic 3");
  detail::require_finite(field);
  OsculatingPlaneReport<E> rep;
  const auto v = twisted_cubic_basis(field);
  const auto axis = span_of(field, "v1v2", {v[1], v[2]});
  rep.axis_is_Dperp = same_subspace(field, axis, subspace_Dperp(field));
  auto check = [&](const std::array<Vec6<E>, 4>& basis, const E& s) {
    ++rep.points_checked;
    const std::vector<Vec6<E>> plane{detail::cubic_derivative(field, basis, s, 0),
                                     detail::cubic_derivative(field, basis, s, 1),
                                     detail::cubic_derivative(field, basis, s, 2)};
    if (detail::plane_contains_axis(field, plane, v[1], v[2])) {
      ++rep.planes_containing_axis;
    } else if (!rep.witness) {
      rep.witness = s;
    }
  };
  if constexpr (K::is_finite()) {
    for (const auto& s : field.elements()) check(v, s);
  }
  // the point s0 = 0 in the reversed chart t = s0/s1
  check({v[3], v[2], v[1], v[0]}, field.zero());
  return rep;
}

}  // namespace osculant
