#pragma once

// Points, planes and lines of PG(3,K), points of PG(5,K) and the Klein
// correspondence between them.
//
// Homogeneous vectors are stored canonically: the first nonzero coordinate
// is scaled to 1. Two vectors describe the same projective object exactly
// when their canonical coordinates agree, so canonical coordinates serve as
// ordering and hashing keys throughout.
//
// Pluecker coordinates use the order (01, 02, 03, 12, 13, 23) with
// y_ij = p_i q_j - p_j q_i.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "osculant/error.hpp"
#include "osculant/field.hpp"
#include "osculant/linalg.hpp"

namespace osculant {

struct PointTag {};
struct PlaneTag {};
struct KleinTag {};

template <class E, std::size_t N, class Tag>
class Homogeneous {
 public:
  using element_type = E;
  static constexpr std::size_t size = N;

  explicit Homogeneous(std::array<E, N> coords) : c_(std::move(coords)) {
    std::size_t lead = 0;
    while (lead < N && c_[lead].is_zero()) ++lead;
    if (lead == N) throw Error(Errc::ZeroVector, "homogeneous coordinates are all zero");
    if (!c_[lead].is_one()) {
      const E scale = c_[lead].inverse();
      for (std::size_t i = lead; i < N; ++i) c_[i] = c_[i] * scale;
    }
  }

  /// Wraps coordinates the caller guarantees to be canonical already.
  static Homogeneous from_canonical(std::array<E, N> coords) {
    Homogeneous h;
    h.c_ = std::move(coords);
    return h;
  }

  const std::array<E, N>& coords() const noexcept { return c_; }
  const E& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }
  friend auto operator<=>(const Homogeneous& a, const Homogeneous& b) { return a.c_ <=> b.c_; }

  friend std::string to_string(const Homogeneous& h) {
    std::string out = "(";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) out += ",";
      out += to_string(h.c_[i]);
    }
    return out + ")";
  }

 private:
  Homogeneous() = default;
  std::array<E, N> c_;
};

template <class E>
using ProjPoint = Homogeneous<E, 4, PointTag>;
template <class E>
using ProjPlane = Homogeneous<E, 4, PlaneTag>;
template <class E>
using KleinPoint = Homogeneous<E, 6, KleinTag>;

template <class E>
using Vec4 = std::array<E, 4>;
template <class E>
using Vec6 = std::array<E, 6>;

template <GroundField K>
ProjPoint<Elem<K>> make_point(const K& field, std::int64_t x0, std::int64_t x1, std::int64_t x2, std::int64_t x3) {
  return ProjPoint<Elem<K>>({field.from_int(x0), field.from_int(x1), field.from_int(x2), field.from_int(x3)});
}

template <GroundField K>
ProjPlane<Elem<K>> make_plane(const K& field, std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  return ProjPlane<Elem<K>>({field.from_int(a0), field.from_int(a1), field.from_int(a2), field.from_int(a3)});
}

template <GroundField K>
KleinPoint<Elem<K>> make_klein(const K& field, std::array<std::int64_t, 6> y) {
  Vec6<Elem<K>> c{field.zero(), field.zero(), field.zero(), field.zero(), field.zero(), field.zero()};
  for (std::size_t i = 0; i < 6; ++i) c[i] = field.from_int(y[i]);
  return KleinPoint<Elem<K>>(c);
}

/// The six 2x2 minors of the 2x4 matrix with rows p and q, unnormalised.
template <class E>
Vec6<E> wedge(const Vec4<E>& p, const Vec4<E>& q) {
  auto m = [&](int i, int j) { return p[i] * q[j] - p[j] * q[i]; };
  return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
}

template <class E>
KleinPoint<E> plucker(const ProjPoint<E>& p, const ProjPoint<E>& q) {
  Vec6<E> y = wedge(p.coords(), q.coords());
  for (const auto& c : y) {
    if (!c.is_zero()) return KleinPoint<E>(std::move(y));
  }
  throw Error(Errc::CoincidentPoints, to_string(p) + " and " + to_string(q) + " span no line");
}

/// k(Y) = Y01 Y23 - Y02 Y13 + Y03 Y12, the Klein quadric.
template <class E>
E klein_form(const Vec6<E>& y) {
  return y[0] * y[5] - y[1] * y[4] + y[2] * y[3];
}

/// Polar bilinear form of k: k(y + z) - k(y) - k(z). Two lines meet exactly
/// when their Pluecker vectors are conjugate.
template <class E>
E klein_polar(const Vec6<E>& y, const Vec6<E>& z) {
  return y[0] * z[5] + y[5] * z[0] - y[1] * z[4] - y[4] * z[1] + y[2] * z[3] + y[3] * z[2];
}

/// A line of PG(3,K): a spanning pair plus its canonical Pluecker sextuple.
/// Equality and ordering only look at the Pluecker sextuple.
template <class E>
class Line {
 public:
  static Line through(const ProjPoint<E>& p, const ProjPoint<E>& q) { return Line(p, q, ::osculant::plucker(p, q)); }

  const ProjPoint<E>& first() const noexcept { return p_; }
  const ProjPoint<E>& second() const noexcept { return q_; }
  const KleinPoint<E>& plucker() const noexcept { return y_; }

  friend bool operator==(const Line& a, const Line& b) { return a.y_ == b.y_; }
  friend auto operator<=>(const Line& a, const Line& b) { return a.y_ <=> b.y_; }

  friend std::string to_string(const Line& l) { return "[" + to_string(l.p_) + " " + to_string(l.q_) + "]"; }

 private:
  Line(ProjPoint<E> p, ProjPoint<E> q, KleinPoint<E> y) : p_(std::move(p)), q_(std::move(q)), y_(std::move(y)) {}
  ProjPoint<E> p_;
  ProjPoint<E> q_;
  KleinPoint<E> y_;
};

/// Insertion-ordered set of lines, deduplicated by Pluecker sextuple.
template <class E>
class LineSet {
 public:
  bool insert(const Line<E>& l) {
    if (!keys_.insert(l.plucker()).second) return false;
    lines_.push_back(l);
    return true;
  }
  bool contains(const Line<E>& l) const { return keys_.count(l.plucker()) != 0; }
  bool contains(const KleinPoint<E>& y) const { return keys_.count(y) != 0; }

  std::size_t size() const noexcept { return lines_.size(); }
  bool empty() const noexcept { return lines_.empty(); }
  const Line<E>& operator[](std::size_t i) const { return lines_[i]; }
  auto begin() const { return lines_.begin(); }
  auto end() const { return lines_.end(); }
  const std::vector<Line<E>>& lines() const noexcept { return lines_; }
  const std::set<KleinPoint<E>>& keys() const noexcept { return keys_; }

  friend bool operator==(const LineSet& a, const LineSet& b) { return a.keys_ == b.keys_; }

 private:
  std::vector<Line<E>> lines_;
  std::set<KleinPoint<E>> keys_;
};

template <class E>
E dot(const Vec4<E>& a, const Vec4<E>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

template <GroundField K>
Elem<K> det4(const K& field, const std::array<Vec4<Elem<K>>, 4>& rows) {
  return determinant(field, Matrix<Elem<K>>::from_rows(std::vector<Vec4<Elem<K>>>(rows.begin(), rows.end()), field.zero()));
}

/// Skewness via the 4x4 determinant of the four spanning points.
template <GroundField K>
bool lines_skew_det(const K& field, const Line<Elem<K>>& a, const Line<Elem<K>>& b) {
  return !det4(field, {a.first().coords(), a.second().coords(), b.first().coords(), b.second().coords()}).is_zero();
}

/// Skewness via the polar form of the Klein quadric.
template <class E>
bool lines_skew_polar(const Line<E>& a, const Line<E>& b) {
  return !klein_polar(a.plucker().coords(), b.plucker().coords()).is_zero();
}

template <class E>
bool lines_skew(const Line<E>& a, const Line<E>& b) {
  return lines_skew_polar(a, b);
}

/// x lies on l iff p ^ q ^ x = 0; each 3x3 minor expands along x.
template <class E>
bool incidence(const ProjPoint<E>& x, const Line<E>& l) {
  const auto& y = l.plucker().coords();
  const auto& c = x.coords();
  // y index of (i,j): 01->0 02->1 03->2 12->3 13->4 23->5
  return (c[2] * y[0] - c[1] * y[1] + c[0] * y[3]).is_zero() &&   // 012
         (c[3] * y[0] - c[1] * y[2] + c[0] * y[4]).is_zero() &&   // 013
         (c[3] * y[1] - c[2] * y[2] + c[0] * y[5]).is_zero() &&   // 023
         (c[3] * y[3] - c[2] * y[4] + c[1] * y[5]).is_zero();     // 123
}

template <class E>
bool point_in_plane(const ProjPoint<E>& x, const ProjPlane<E>& plane) {
  return dot(x.coords(), plane.coords()).is_zero();
}

template <class E>
bool line_in_plane(const Line<E>& l, const ProjPlane<E>& plane) {
  return point_in_plane(l.first(), plane) && point_in_plane(l.second(), plane);
}

/// The point where l meets the plane, or nothing when l lies in it.
template <class E>
std::optional<ProjPoint<E>> meet_line_plane(const Line<E>& l, const ProjPlane<E>& plane) {
  const E a = dot(l.first().coords(), plane.coords());
  const E b = dot(l.second().coords(), plane.coords());
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  Vec4<E> v = l.first().coords();
  for (std::size_t i = 0; i < 4; ++i) v[i] = b * l.first()[i] - a * l.second()[i];
  return ProjPoint<E>(v);
}

/// The line of intersection of two distinct planes.
template <GroundField K>
Line<Elem<K>> line_of_planes(const K& field, const ProjPlane<Elem<K>>& a, const ProjPlane<Elem<K>>& b) {
  auto m = Matrix<Elem<K>>::from_rows(std::vector<Vec4<Elem<K>>>{a.coords(), b.coords()}, field.zero());
  auto basis = nullspace(field, std::move(m));
  if (basis.size() != 2) throw Error(Errc::CoincidentPoints, "planes coincide: " + to_string(a));
  auto to4 = [](const std::vector<Elem<K>>& v) { return ProjPoint<Elem<K>>({v[0], v[1], v[2], v[3]}); };
  return Line<Elem<K>>::through(to4(basis[0]), to4(basis[1]));
}

// ---------------------------------------------------------------------------
// Enumeration over finite fields

namespace detail {

template <class K>
void require_finite(const K& field) {
  if constexpr (!K::is_finite()) {
    throw Error(Errc::InfiniteField, "cannot enumerate over " + field.name());
  }
}

}  // namespace detail

/// Number of points of PG(N-1, q).
inline std::uint64_t projective_count(std::uint64_t q, std::size_t n) {
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += block;
    block *= q;
  }
  return total;
}

/// The canonical vector with lexicographic rank `index` among all canonical
/// vectors of length N. Lexicographic order puts (0,..,0,1) first.
template <std::size_t N, FiniteGroundField K>
std::array<Elem<K>, N> canonical_at(const K& field, std::uint64_t index) {
  const std::uint64_t q = field.order();
  std::array<Elem<K>, N> c;
  c.fill(field.zero());
  for (std::size_t lead = N; lead-- > 0;) {
    std::uint64_t block = 1;
    for (std::size_t i = lead + 1; i < N; ++i) block *= q;
    if (index < block) {
      c[lead] = field.one();
      for (std::size_t i = N; i-- > lead + 1;) {
        c[i] = field.from_int(static_cast<std::int64_t>(index % q));
        index /= q;
      }
      return c;
    }
    index -= block;
  }
  throw Error(Errc::ZeroVector, "canonical index out of range");
}

template <std::size_t N, GroundField K, class Fn>
void for_each_canonical(const K& field, Fn&& fn) {
  detail::require_finite(field);
  if constexpr (K::is_finite()) {
    const std::uint64_t total = projective_count(field.order(), N);
    for (std::uint64_t i = 0; i < total; ++i) fn(canonical_at<N>(field, i));
  }
}

template <GroundField K>
std::vector<ProjPoint<Elem<K>>> enumerate_points(const K& field) {
  std::vector<ProjPoint<Elem<K>>> out;
  for_each_canonical<4>(field, [&](const Vec4<Elem<K>>& c) { out.push_back(ProjPoint<Elem<K>>::from_canonical(c)); });
  return out;
}

template <GroundField K>
std::vector<ProjPlane<Elem<K>>> enumerate_planes(const K& field) {
  std::vector<ProjPlane<Elem<K>>> out;
  for_each_canonical<4>(field, [&](const Vec4<Elem<K>>& c) { out.push_back(ProjPlane<Elem<K>>::from_canonical(c)); });
  return out;
}

/// All lines, generated from the reduced row echelon forms of 2x4 matrices
/// and returned in lexicographic order of their Pluecker sextuples.
template <GroundField K>
std::vector<Line<Elem<K>>> enumerate_lines(const K& field) {
  detail::require_finite(field);
  std::vector<Line<Elem<K>>> out;
  if constexpr (K::is_finite()) {
    const auto elems = field.elements();
    const std::uint64_t q = elems.size();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        // free slots: row 1 at k > i, k != j; row 2 at k > j
        std::vector<std::pair<int, std::size_t>> slots;
        for (std::size_t k = i + 1; k < 4; ++k) {
          if (k != j) slots.emplace_back(0, k);
        }
        for (std::size_t k = j + 1; k < 4; ++k) slots.emplace_back(1, k);
        std::uint64_t combos = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) combos *= q;
        for (std::uint64_t code = 0; code < combos; ++code) {
          Vec4<Elem<K>> r0{field.zero(), field.zero(), field.zero(), field.zero()};
          Vec4<Elem<K>> r1 = r0;
          r0[i] = field.one();
          r1[j] = field.one();
          std::uint64_t rest = code;
          for (const auto& [row, k] : slots) {
            (row == 0 ? r0 : r1)[k] = elems[rest % q];
            rest /= q;
          }
          out.push_back(Line<Elem<K>>::through(ProjPoint<Elem<K>>::from_canonical(r0),
                                               ProjPoint<Elem<K>>::from_canonical(r1)));
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

/// The q+1 points of a line over a finite field, in lexicographic order.
template <GroundField K>
std::vector<ProjPoint<Elem<K>>> points_on_line(const K& field, const Line<Elem<K>>& l) {
  detail::require_finite(field);
  std::vector<ProjPoint<Elem<K>>> out;
  if constexpr (K::is_finite()) {
    const auto& p = l.first().coords();
    const auto& q = l.second().coords();
    for (const auto& t : field.elements()) {
      out.emplace_back(Vec4<Elem<K>>{p[0] + t * q[0], p[1] + t * q[1], p[2] + t * q[2], p[3] + t * q[3]});
    }
    out.push_back(l.second());
    std::sort(out.begin(), out.end());
  }
  return out;
}

}  // namespace osculant
