#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace addsparse {

using Digit = std::uint32_t;

/// A subset of tuple positions [k] as a bitmask; bit l stands for position l.
using PositionSet = std::uint32_t;

inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 24;

/// q^k, throwing when it exceeds `cap`.
inline std::size_t checked_pow(std::size_t q, std::size_t k, std::size_t cap = kMaxTableSize) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (q != 0 && result > cap / q)
      throw std::length_error("q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                              " exceeds the table cap");
    result *= q;
  }
  return result;
}

/// Base-q digits of i, most significant digit first.
inline std::vector<Digit> rep(std::size_t q, std::size_t k, std::size_t i) {
  if (q < 2) throw std::invalid_argument("rep: base must be at least 2");
  if (i >= checked_pow(q, k, SIZE_MAX))
    throw std::out_of_range("rep: index " + std::to_string(i) + " out of range");
  std::vector<Digit> digits(k, 0);
  for (std::size_t pos = k; pos-- > 0;) {
    digits[pos] = static_cast<Digit>(i % q);
    i /= q;
  }
  return digits;
}

inline std::size_t index(std::size_t q, std::span<const Digit> digits) {
  std::size_t i = 0;
  for (Digit d : digits) {
    if (d >= q) throw std::out_of_range("index: digit " + std::to_string(d) + " >= q");
    i = i * q + d;
  }
  return i;
}

inline std::vector<Digit> bin(std::size_t k, std::size_t i) { return rep(2, k, i); }

inline PositionSet full_positions(std::size_t k) {
  return k >= 32 ? ~PositionSet{0} : (PositionSet{1} << k) - 1;
}

/// Positions l with bin_k(i)[l] == 0, as a mask.
inline PositionSet zeros_mask(std::size_t k, std::size_t i) {
  if (k > 31) throw std::out_of_range("zeros: arity too large for a position mask");
  if (i >= (std::size_t{1} << k)) throw std::out_of_range("zeros: index out of range");
  PositionSet mask = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    bool bit = (i >> (k - 1 - pos)) & 1U;
    if (!bit) mask |= PositionSet{1} << pos;
  }
  return mask;
}

inline std::vector<std::size_t> positions_of(PositionSet set) {
  std::vector<std::size_t> out;
  for (std::size_t pos = 0; set != 0; ++pos, set >>= 1)
    if (set & 1U) out.push_back(pos);
  return out;
}

inline PositionSet make_positions(std::span<const std::size_t> positions) {
  PositionSet set = 0;
  for (std::size_t p : positions) {
    if (p >= 32) throw std::out_of_range("position out of range");
    set |= PositionSet{1} << p;
  }
  return set;
}

inline std::vector<std::size_t> zeros(std::size_t k, std::size_t i) {
  return positions_of(zeros_mask(k, i));
}

inline int hamming_weight(std::uint64_t x) { return std::popcount(x); }

}  // namespace addsparse
