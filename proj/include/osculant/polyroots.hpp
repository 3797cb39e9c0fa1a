#pragma once

// Roots in K of univariate polynomials of small degree, with multiplicity.
// Finite fields are searched exhaustively. Over Q the rational root theorem
// is applied to the integer polynomial obtained by clearing denominators;
// the integers involved are factored completely (trial division, then
// Pollard-Brent on the cofactor).

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "osculant/field.hpp"

namespace osculant {

template <class E>
struct Root {
  E value;
  int multiplicity = 0;
};

namespace detail {

/// Horner evaluation; coefficients highest degree first.
template <class E>
E evaluate(const std::vector<E>& coeffs, const E& x, const E& zero) {
  E acc = zero;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

/// Divides by (X - r), assuming r is a root. Highest degree first.
template <class E>
std::vector<E> deflate(const std::vector<E>& coeffs, const E& r) {
  std::vector<E> out;
  if (coeffs.size() <= 1) return out;
  out.reserve(coeffs.size() - 1);
  E carry = coeffs.front();
  out.push_back(carry);
  for (std::size_t i = 1; i + 1 < coeffs.size(); ++i) {
    carry = coeffs[i] + carry * r;
    out.push_back(carry);
  }
  return out;
}

template <class E>
std::vector<E> trim_leading_zeros(std::vector<E> coeffs) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  return coeffs;
}

inline mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    std::uint64_t r = 1;
    const std::uint64_t m = 64;
    auto step = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          mpz_class diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(mpz_class(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 2) return;
  for (unsigned long d = 2; d < 10000 && mpz_class(d) * d <= n; ++d) {
    while (n % d == 0) {
      ++out[mpz_class(d)];
      n /= d;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(mpz_class(n / d), out);
}

/// Positive divisors of |n| (n != 0), ascending.
inline std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, int> factors;
  factor_into(abs(n), factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int e = 1; e <= exp; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

template <class E>
std::vector<Root<E>> with_multiplicities(std::vector<E> coeffs, std::vector<E> distinct, const E& zero) {
  std::sort(distinct.begin(), distinct.end());
  std::vector<Root<E>> out;
  for (const auto& r : distinct) {
    int mult = 0;
    std::vector<E> cur = coeffs;
    while (cur.size() > 1 && evaluate(cur, r, zero).is_zero()) {
      cur = deflate(cur, r);
      ++mult;
    }
    out.push_back({r, mult});
  }
  return out;
}

}  // namespace detail

/// Roots in GF(p) of a nonzero polynomial (coefficients highest first).
inline std::vector<Root<Fp>> roots_in_field(const PrimeField& field, const std::vector<Fp>& coeffs_in) {
  auto coeffs = detail::trim_leading_zeros(coeffs_in);
  if (coeffs.size() <= 1) return {};
  std::vector<Fp> distinct;
  for (const auto& x : field.elements()) {
    if (detail::evaluate(coeffs, x, field.zero()).is_zero()) distinct.push_back(x);
  }
  return detail::with_multiplicities(coeffs, distinct, field.zero());
}

/// Rational roots of a nonzero polynomial with rational coefficients.
inline std::vector<Root<Rational>> roots_in_field(const RationalField& field, const std::vector<Rational>& coeffs_in) {
  auto coeffs = detail::trim_leading_zeros(coeffs_in);
  if (coeffs.size() <= 1) return {};
  // integer multiple with the same roots
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs) lcm_den = lcm(lcm_den, c.denominator());
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) ints.emplace_back(c.numerator() * (lcm_den / c.denominator()));
  std::vector<Rational> distinct;
  std::size_t low = ints.size() - 1;
  while (ints[low] == 0) {
    if (distinct.empty()) distinct.push_back(field.zero());
    --low;
  }
  if (low > 0) {
    const auto num_divs = detail::divisors(ints[low]);
    const auto den_divs = detail::divisors(ints.front());
    for (const auto& s : den_divs) {
      for (const auto& r : num_divs) {
        if (gcd(r, s) != 1) continue;
        for (int sign : {1, -1}) {
          Rational cand(mpq_class(mpz_class(sign * r), s));
          if (detail::evaluate(coeffs, cand, field.zero()).is_zero()) distinct.push_back(cand);
        }
      }
    }
  }
  return detail::with_multiplicities(coeffs, distinct, field.zero());
}

}  // namespace osculant
