#pragma once

// Cayley's ruled cubic surface F = V(X0 X1 X2 - X1^3 - X0^2 X3) in PG(3,K):
// membership, singular structure, tangent planes and cones, generators,
// line sections, the automorphism group G = { M_{a,b,c} } and the duality
// taking points of F to its tangent planes.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "osculant/error.hpp"
#include "osculant/field.hpp"
#include "osculant/polyroots.hpp"
#include "osculant/projspace.hpp"

namespace osculant {

template <class E>
E f_value(const Vec4<E>& x) {
  return x[0] * x[1] * x[2] - x[1] * x[1] * x[1] - x[0] * x[0] * x[3];
}

template <class E>
E f_value(const ProjPoint<E>& x) {
  return f_value(x.coords());
}

/// The four partial derivatives of f at x.
template <GroundField K>
Vec4<Elem<K>> gradient(const K& field, const ProjPoint<Elem<K>>& point) {
  const auto& x = point.coords();
  const auto two = field.from_int(2), three = field.from_int(3);
  return {x[1] * x[2] - two * x[0] * x[3],
          x[0] * x[2] - three * x[1] * x[1],
          x[0] * x[1],
          -(x[0] * x[0])};
}

/// P(u1,u2) = (1, u1, u2, u1 u2 - u1^3), the affine part of F.
template <GroundField K>
ProjPoint<Elem<K>> surface_point(const K& field, const Elem<K>& u1, const Elem<K>& u2) {
  return ProjPoint<Elem<K>>::from_canonical({field.one(), u1, u2, u1 * u2 - u1 * u1 * u1});
}

/// Z = (0,0,0,1), the pinch point.
template <GroundField K>
ProjPoint<Elem<K>> pinch_point(const K& field) {
  return make_point(field, 0, 0, 0, 1);
}

/// The directrix g_inf = V(X0, X1).
template <GroundField K>
Line<Elem<K>> g_infinity(const K& field) {
  return Line<Elem<K>>::through(make_point(field, 0, 0, 1, 0), make_point(field, 0, 0, 0, 1));
}

/// The plane at infinity omega = V(X0).
template <GroundField K>
ProjPlane<Elem<K>> omega_plane(const K& field) {
  return make_plane(field, 1, 0, 0, 0);
}

template <class E>
bool on_g_infinity(const ProjPoint<E>& x) {
  return x[0].is_zero() && x[1].is_zero();
}

/// The line n = V(X0, X2); nuclei of F sit on it in characteristic 3.
template <GroundField K>
Line<Elem<K>> nucleus_line(const K& field) {
  return Line<Elem<K>>::through(make_point(field, 0, 1, 0, 0), make_point(field, 0, 0, 0, 1));
}

enum class PointClass { SimpleOnF, DoubleOnGInf, PinchPointZ, Nucleus, OffSurface };

inline std::string_view point_class_name(PointClass c) {
  switch (c) {
    case PointClass::SimpleOnF: return "SimpleOnF";
    case PointClass::DoubleOnGInf: return "DoubleOnGInf";
    case PointClass::PinchPointZ: return "PinchPointZ";
    case PointClass::Nucleus: return "Nucleus";
    case PointClass::OffSurface: return "OffSurface";
  }
  return "Unknown";
}

template <GroundField K>
PointClass classify_point(const K& field, const ProjPoint<Elem<K>>& x) {
  const auto grad = gradient(field, x);
  const bool singular = std::all_of(grad.begin(), grad.end(), [](const auto& g) { return g.is_zero(); });
  if (!f_value(x).is_zero()) return singular ? PointClass::Nucleus : PointClass::OffSurface;
  if (x == pinch_point(field)) return PointClass::PinchPointZ;
  if (on_g_infinity(x)) return PointClass::DoubleOnGInf;
  return PointClass::SimpleOnF;
}

/// Tangent plane of F at P(u1,u2).
template <GroundField K>
ProjPlane<Elem<K>> tangent_plane(const K& field, const Elem<K>& u1, const Elem<K>& u2) {
  const auto two = field.from_int(2), three = field.from_int(3);
  return ProjPlane<Elem<K>>({two * u1 * u1 * u1 - u1 * u2, -three * u1 * u1 + u2, u1, -field.one()});
}

template <class E>
struct TangentCone {
  ProjPlane<E> first;   // always omega
  ProjPlane<E> second;  // V(s2 X1 - s3 X0)
  bool repeated = false;
};

/// Tangent cone X0 (s2 X1 - s3 X0) of F at U = (0,0,s2,s3) on g_inf.
template <GroundField K>
TangentCone<Elem<K>> tangent_cone_at_infinity(const K& field, const ProjPoint<Elem<K>>& u) {
  if (!on_g_infinity(u)) throw Error(Errc::NotOnGInf, to_string(u) + " is not on g_inf");
  const auto z = field.zero();
  ProjPlane<Elem<K>> second({-u[3], u[2], z, z});
  const auto om = omega_plane(field);
  return {om, second, second == om};
}

/// g(s0,s1) = K(s0^2, s0 s1, s1^2, 0) + K(0, 0, s0, s1).
template <GroundField K>
Line<Elem<K>> generator(const K& field, const Elem<K>& s0, const Elem<K>& s1) {
  if (s0.is_zero() && s1.is_zero()) throw Error(Errc::ZeroParameters, "generator(0,0)");
  const auto z = field.zero();
  return Line<Elem<K>>::through(ProjPoint<Elem<K>>({s0 * s0, s0 * s1, s1 * s1, z}),
                                ProjPoint<Elem<K>>({z, z, s0, s1}));
}

template <class E>
struct IntersectionProfile {
  bool contained = false;
  std::vector<std::pair<ProjPoint<E>, int>> points;  // ascending by point

  int total_multiplicity() const {
    int sum = 0;
    for (const auto& [pt, m] : points) sum += m;
    return sum;
  }
};

namespace detail {

/// Coefficients of a binary form in (lambda, mu), index i holding the
/// coefficient of lambda^(d-i) mu^i.
template <class E>
std::vector<E> mul_binary(const std::vector<E>& a, const std::vector<E>& b, const E& zero) {
  std::vector<E> out(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

}  // namespace detail

/// The restriction of f to lambda p + mu q, as a binary cubic
/// [c_{lambda^3}, c_{lambda^2 mu}, c_{lambda mu^2}, c_{mu^3}].
template <GroundField K>
std::array<Elem<K>, 4> restrict_to_line(const K& field, const Line<Elem<K>>& l) {
  using E = Elem<K>;
  const auto z = field.zero();
  const auto& p = l.first().coords();
  const auto& q = l.second().coords();
  auto lin = [&](int i) { return std::vector<E>{p[i], q[i]}; };
  auto cube = [&](int i, int j, int k) { return detail::mul_binary(detail::mul_binary(lin(i), lin(j), z), lin(k), z); };
  const auto t012 = cube(0, 1, 2);
  const auto t111 = cube(1, 1, 1);
  const auto t003 = cube(0, 0, 3);
  return {t012[0] - t111[0] - t003[0], t012[1] - t111[1] - t003[1], t012[2] - t111[2] - t003[2],
          t012[3] - t111[3] - t003[3]};
}

/// K-rational points of l on F with intersection multiplicities. Over Q
/// only rational roots of the restricted cubic are reported.
template <GroundField K>
IntersectionProfile<Elem<K>> intersect_line_surface(const K& field, const Line<Elem<K>>& l) {
  using E = Elem<K>;
  const auto c = restrict_to_line(field, l);
  IntersectionProfile<E> out;
  if (std::all_of(c.begin(), c.end(), [](const E& x) { return x.is_zero(); })) {
    out.contained = true;
    return out;
  }
  const auto& p = l.first().coords();
  const auto& q = l.second().coords();
  // (lambda : mu) = (1 : 0) is the point p; its multiplicity is the number
  // of vanishing leading coefficients.
  int at_p = 0;
  while (at_p < 4 && c[at_p].is_zero()) ++at_p;
  if (at_p > 0) out.points.emplace_back(l.first(), at_p);
  // remaining roots: lambda = t, mu = 1, i.e. the point t p + q
  std::vector<E> poly(c.begin(), c.end());
  for (const auto& root : roots_in_field(field, poly)) {
    const E& t = root.value;
    out.points.emplace_back(ProjPoint<E>({t * p[0] + q[0], t * p[1] + q[1], t * p[2] + q[2], t * p[3] + q[3]}),
                            root.multiplicity);
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// ---------------------------------------------------------------------------
// The group G

template <class E>
struct GMatrix {
  E a, b, c;
  std::array<Vec4<E>, 4> entries;
};

template <GroundField K>
std::array<Vec4<Elem<K>>, 4> gmatrix_entries(const K& field, const Elem<K>& a, const Elem<K>& b, const Elem<K>& c) {
  const auto z = field.zero();
  const auto three = field.from_int(3);
  return {{{field.one(), z, z, z},
           {a, c, z, z},
           {b, three * a * c, c * c, z},
           {a * b - a * a * a, b * c, a * c * c, c * c * c}}};
}

template <GroundField K>
GMatrix<Elem<K>> group_matrix(const K& field, const Elem<K>& a, const Elem<K>& b, const Elem<K>& c) {
  if (c.is_zero()) throw Error(Errc::ZeroScale, "M_{a,b,c} needs c != 0");
  return {a, b, c, gmatrix_entries(field, a, b, c)};
}

template <GroundField K>
ProjPoint<Elem<K>> group_apply(const K& field, const GMatrix<Elem<K>>& m, const ProjPoint<Elem<K>>& x) {
  Vec4<Elem<K>> out{field.zero(), field.zero(), field.zero(), field.zero()};
  for (std::size_t i = 0; i < 4; ++i) out[i] = dot(m.entries[i], x.coords());
  return ProjPoint<Elem<K>>(out);
}

template <GroundField K>
Line<Elem<K>> group_apply(const K& field, const GMatrix<Elem<K>>& m, const Line<Elem<K>>& l) {
  return Line<Elem<K>>::through(group_apply(field, m, l.first()), group_apply(field, m, l.second()));
}

/// Recovers (a,b,c) from a 4x4 matrix if it has the shape of some M_{a,b,c}.
template <GroundField K>
std::optional<GMatrix<Elem<K>>> as_gmatrix(const K& field, const std::array<Vec4<Elem<K>>, 4>& m) {
  const auto& a = m[1][0];
  const auto& c = m[1][1];
  const auto& b = m[2][0];
  if (c.is_zero()) return std::nullopt;
  auto expected = gmatrix_entries(field, a, b, c);
  if (expected != m) return std::nullopt;
  return GMatrix<Elem<K>>{a, b, c, m};
}

/// The product m * n, which lies in G again.
template <GroundField K>
GMatrix<Elem<K>> group_compose(const K& field, const GMatrix<Elem<K>>& m, const GMatrix<Elem<K>>& n) {
  std::array<Vec4<Elem<K>>, 4> prod;
  for (std::size_t i = 0; i < 4; ++i) {
    prod[i] = {field.zero(), field.zero(), field.zero(), field.zero()};
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) prod[i][j] = prod[i][j] + m.entries[i][k] * n.entries[k][j];
    }
  }
  auto g = as_gmatrix(field, prod);
  if (!g) throw std::logic_error("product of two elements of G left G");
  return *g;
}

/// Action of M_{a,b,c} on the chart: P(u1,u2) -> P(a + c u1, b + 3ac u1 + c^2 u2).
template <GroundField K>
std::pair<Elem<K>, Elem<K>> affine_action(const K& field, const GMatrix<Elem<K>>& m, const Elem<K>& u1,
                                          const Elem<K>& u2) {
  return {m.a + m.c * u1, m.b + field.from_int(3) * m.a * m.c * u1 + m.c * m.c * u2};
}

enum class Orbit { AffineSurfaceOrbit, GInfMinusZ, ZOrbit, NotOnSurface };

inline std::string_view orbit_name(Orbit o) {
  switch (o) {
    case Orbit::AffineSurfaceOrbit: return "AffineSurfaceOrbit";
    case Orbit::GInfMinusZ: return "GInfMinusZ";
    case Orbit::ZOrbit: return "ZOrbit";
    case Orbit::NotOnSurface: return "NotOnSurface";
  }
  return "Unknown";
}

template <GroundField K>
Orbit orbit_of(const K& field, const ProjPoint<Elem<K>>& x) {
  if (!f_value(x).is_zero()) return Orbit::NotOnSurface;
  if (x == pinch_point(field)) return Orbit::ZOrbit;
  if (on_g_infinity(x)) return Orbit::GInfMinusZ;
  return Orbit::AffineSurfaceOrbit;
}

// ---------------------------------------------------------------------------
// Duality

/// (x0,x1,x2,x3)^T -> (x3,x2,x1,x0): takes F onto its set of tangent planes.
template <class E>
ProjPlane<E> duality(const ProjPoint<E>& x) {
  return ProjPlane<E>({x[3], x[2], x[1], x[0]});
}

/// Inverse of `duality`.
template <class E>
ProjPoint<E> duality_inverse(const ProjPlane<E>& e) {
  return ProjPoint<E>({e[3], e[2], e[1], e[0]});
}

/// a1 a2 a3 - a2^3 - a0 a3^2 = 0: the plane is a tangent plane of F.
template <class E>
bool tangency_test(const ProjPlane<E>& e) {
  return (e[1] * e[2] * e[3] - e[2] * e[2] * e[2] - e[0] * e[3] * e[3]).is_zero();
}

/// Image of a line under the duality: the meet of the images of two of its points.
template <GroundField K>
Line<Elem<K>> dual_line(const K& field, const Line<Elem<K>>& l) {
  return line_of_planes(field, duality(l.first()), duality(l.second()));
}

/// Every tangent plane of F over a finite field: the planes at the affine
/// points together with the tangent cone planes along g_inf.
template <GroundField K>
std::set<ProjPlane<Elem<K>>> all_tangent_planes(const K& field) {
  detail::require_finite(field);
  std::set<ProjPlane<Elem<K>>> out;
  if constexpr (K::is_finite()) {
    for (const auto& u1 : field.elements()) {
      for (const auto& u2 : field.elements()) out.insert(tangent_plane(field, u1, u2));
    }
    for (const auto& u : points_on_line(field, g_infinity(field))) {
      const auto cone = tangent_cone_at_infinity(field, u);
      out.insert(cone.first);
      out.insert(cone.second);
    }
  }
  return out;
}

}  // namespace osculant
