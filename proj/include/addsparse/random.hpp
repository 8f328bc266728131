#pragma once

// Seed-deterministic sampling helpers. Only raw mt19937_64 output is used so
// that results do not depend on the standard library's distributions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace addsparse {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform double in [0, 1).
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// A uniformly random m-subset of [0, n), sorted.
inline std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> items(n);
  std::iota(items.begin(), items.end(), std::size_t{0});
  m = std::min(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
    std::swap(items[i], items[j]);
  }
  items.resize(m);
  std::sort(items.begin(), items.end());
  return items;
}

}  // namespace addsparse
