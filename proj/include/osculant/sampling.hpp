#pragma once

// Deterministic pseudorandom values. Raw mt19937_64 output is reduced
// modulo the range; the standard distributions are avoided because their
// output is not specified across library implementations.

#include <cstdint>
#include <random>

#include "osculant/field.hpp"

namespace osculant {

using SampleRng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi].
inline std::int64_t sample_int(SampleRng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// n/d with |n| <= height and 1 <= d <= height.
inline Rational sample_rational(SampleRng& rng, std::int64_t height) {
  const auto n = sample_int(rng, -height, height);
  const auto d = sample_int(rng, 1, height);
  return Rational(static_cast<long>(n), static_cast<long>(d));
}

}  // namespace osculant
