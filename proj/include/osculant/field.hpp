#pragma once

// Exact ground fields: prime fields GF(p) and the rationals.
//
// Geometry code is written once against the `GroundField` concept. A field
// object hands out elements (`zero()`, `one()`, `from_int()`), knows its
// characteristic, and, when finite, lists its elements in residue order.
// Elements are small value types with the usual arithmetic operators.

#include <algorithm>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "osculant/error.hpp"

namespace osculant {

/// Residue class modulo a prime. The modulus travels with the value so the
/// arithmetic operators need no external context.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1 % p_; }

  friend Fp operator+(Fp a, Fp b) noexcept {
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Fp operator-(Fp a, Fp b) noexcept {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_), a.p_);
  }
  friend Fp operator-(Fp a) noexcept { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) noexcept {
    return raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) noexcept { return *this = *this + b; }
  Fp& operator-=(Fp b) noexcept { return *this = *this - b; }
  Fp& operator*=(Fp b) noexcept { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }

  Fp inverse() const {
    if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (v, p)
    std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t quot = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - quot * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - quot * s1};
    }
    return Fp(s0, p_);
  }

  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Fp a, Fp b) noexcept { return a.v_ <=> b.v_; }

  friend std::string to_string(Fp a) { return std::to_string(a.v_); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) noexcept {
    Fp out;
    out.v_ = v;
    out.p_ = p;
    return out;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 1;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  const mpq_class& get() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0 in Q");
    return Rational(mpq_class(1 / q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::string to_string(const Rational& a) { return a.q_.get_str(); }

 private:
  mpq_class q_{0};
};

/// Parses "n" or "n/d" (optional leading '-'), rejecting a zero denominator.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(Errc::MalformedSpec, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') throw bad();
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

template <class E>
E power(E base, std::uint64_t exponent, E one) {
  E acc = std::move(one);
  while (exponent > 0) {
    if (exponent & 1U) acc = acc * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return acc;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// GF(p) for a prime p below 2^31.
class PrimeField {
 public:
  using element_type = Fp;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1U << 31)) throw Error(Errc::NonPrimeModulus, "modulus too large: " + std::to_string(p));
    if (!is_prime(p)) throw Error(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  static constexpr bool is_finite() noexcept { return true; }
  std::uint64_t order() const noexcept { return p_; }

  Fp zero() const noexcept { return Fp(0, p_); }
  Fp one() const noexcept { return Fp(1, p_); }
  Fp from_int(std::int64_t v) const noexcept { return Fp(v, p_); }

  /// All elements in residue order 0, 1, ..., p-1.
  std::vector<Fp> elements() const {
    std::vector<Fp> out;
    out.reserve(p_);
    for (std::uint32_t i = 0; i < p_; ++i) out.emplace_back(i, p_);
    return out;
  }
  /// Index of an element within `elements()`.
  std::size_t index_of(Fp a) const noexcept { return a.value(); }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::string spec_string() const { return "gf:" + std::to_string(p_); }

 private:
  std::uint32_t p_;
};

/// The field of rational numbers.
class RationalField {
 public:
  using element_type = Rational;

  static constexpr std::uint32_t characteristic() noexcept { return 0; }
  static constexpr bool is_finite() noexcept { return false; }

  Rational zero() const { return Rational(0L); }
  Rational one() const { return Rational(1L); }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Rational fraction(long n, long d) const { return Rational(n, d); }

  std::string name() const { return "Q"; }
  std::string spec_string() const { return "q"; }
};

template <class K>
concept GroundField = requires(const K& k, const typename K::element_type& a) {
  typename K::element_type;
  { k.zero() } -> std::same_as<typename K::element_type>;
  { k.one() } -> std::same_as<typename K::element_type>;
  { k.from_int(std::int64_t{1}) } -> std::same_as<typename K::element_type>;
  { k.characteristic() } -> std::convertible_to<std::uint32_t>;
  { K::is_finite() } -> std::same_as<bool>;
  { a + a } -> std::same_as<typename K::element_type>;
  { a * a } -> std::same_as<typename K::element_type>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<typename K::element_type>;
};

template <class K>
concept FiniteGroundField = GroundField<K> && K::is_finite() && requires(const K& k) {
  { k.elements() } -> std::same_as<std::vector<typename K::element_type>>;
  { k.order() } -> std::convertible_to<std::uint64_t>;
};

template <GroundField K>
using Elem = typename K::element_type;

/// Which ground field a run works over; parsed from "gf:<p>" or "q".
class FieldSpec {
 public:
  static FieldSpec prime(std::uint32_t p) {
    PrimeField validate(p);
    (void)validate;
    return FieldSpec(p);
  }
  static FieldSpec rationals() { return FieldSpec(std::nullopt); }

  bool is_rational() const noexcept { return !modulus_; }
  bool is_finite() const noexcept { return modulus_.has_value(); }
  std::uint32_t modulus() const { return modulus_.value(); }
  std::uint32_t characteristic() const noexcept { return modulus_.value_or(0); }

  std::string to_string() const { return modulus_ ? "gf:" + std::to_string(*modulus_) : "q"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::optional<std::uint32_t> p) : modulus_(p) {}
  std::optional<std::uint32_t> modulus_;
};

inline FieldSpec parse_field_spec(std::string_view text) {
  if (text == "q" || text == "Q") return FieldSpec::rationals();
  constexpr std::string_view prefix = "gf:";
  if (text.substr(0, prefix.size()) != prefix || text.size() == prefix.size()) {
    throw Error(Errc::MalformedSpec, "expected 'gf:<p>' or 'q', got '" + std::string(text) + "'");
  }
  const std::string_view digits = text.substr(prefix.size());
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(Errc::MalformedSpec, "bad modulus in '" + std::string(text) + "'");
  }
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw Error(Errc::NonPrimeModulus, std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

/// Calls `fn` with a `PrimeField` or a `RationalField` matching `spec`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField(spec.modulus()));
}

// ---------------------------------------------------------------------------
// Cube roots and the spread regime

namespace detail {

inline std::optional<mpz_class> exact_cube_root(const mpz_class& z) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), 3) != 0) return root;
  return std::nullopt;
}

}  // namespace detail

/// { s in GF(p) : s^3 = a }, ascending; exhaustive search.
inline std::vector<Fp> cube_roots(const PrimeField& field, Fp a) {
  std::vector<Fp> out;
  for (const Fp& s : field.elements()) {
    if (s * s * s == a) out.push_back(s);
  }
  return out;
}

/// { s in Q : s^3 = a }; at most one element since cubing is injective on Q.
inline std::vector<Rational> cube_roots(const RationalField&, const Rational& a) {
  auto num = detail::exact_cube_root(a.numerator());
  auto den = detail::exact_cube_root(a.denominator());
  if (!num || !den) return {};
  return {Rational(mpq_class(*num, *den))};
}

/// Smallest root w != 1 of X^2 + X + 1, if any.
inline std::optional<Fp> nontrivial_cube_root_of_unity(const PrimeField& field) {
  for (const Fp& x : field.elements()) {
    if (!x.is_one() && (x * x + x + field.one()).is_zero()) return x;
  }
  return std::nullopt;
}

/// X^2 + X + 1 has discriminant -3, which is not a rational square.
inline std::optional<Rational> nontrivial_cube_root_of_unity(const RationalField&) { return std::nullopt; }

template <class E>
struct CubeRootProfile {
  std::uint32_t characteristic = 0;
  bool cubing_injective = false;
  bool cubing_surjective = false;
  std::optional<E> nontrivial_unity_root;
};

inline CubeRootProfile<Fp> cube_root_profile(const PrimeField& field) {
  std::vector<bool> hit(field.modulus(), false);
  std::size_t images = 0;
  for (const Fp& s : field.elements()) {
    const Fp c = s * s * s;
    if (!hit[c.value()]) {
      hit[c.value()] = true;
      ++images;
    }
  }
  const bool bijective = images == field.modulus();
  return {field.characteristic(), bijective, bijective, nontrivial_cube_root_of_unity(field)};
}

inline CubeRootProfile<Rational> cube_root_profile(const RationalField& field) {
  // 2 has no rational cube root, so cubing is not onto.
  return {0, true, cube_roots(field, field.from_int(2)).size() == 1, std::nullopt};
}

enum class SpreadRegime { Char3, SpreadAndCovering, MaximalPartialNotCovering, NotPartialSpread };

inline std::string_view regime_name(SpreadRegime r) {
  switch (r) {
    case SpreadRegime::Char3: return "Char3";
    case SpreadRegime::SpreadAndCovering: return "SpreadAndCovering";
    case SpreadRegime::MaximalPartialNotCovering: return "MaximalPartialNotCovering";
    case SpreadRegime::NotPartialSpread: return "NotPartialSpread";
  }
  return "Unknown";
}

template <GroundField K>
SpreadRegime classify_field(const K& field) {
  if (field.characteristic() == 3) return SpreadRegime::Char3;
  const auto profile = cube_root_profile(field);
  if (profile.nontrivial_unity_root) return SpreadRegime::NotPartialSpread;
  return profile.cubing_surjective ? SpreadRegime::SpreadAndCovering : SpreadRegime::MaximalPartialNotCovering;
}

inline bool regime_is_partial_spread(SpreadRegime r) {
  return r == SpreadRegime::SpreadAndCovering || r == SpreadRegime::MaximalPartialNotCovering;
}

}  // namespace osculant
