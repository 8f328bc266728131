#pragma once

// Truth-table algebra: profile vectors v_{G,a}, the u_T family, the +-1/2
// coefficients lambda_{r,m}, and exact reconstruction of standard basis
// vectors from the u_T.

#include "addsparse/encoding.hpp"
#include "addsparse/hypergraph.hpp"
#include "addsparse/predicate.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace addsparse {

using IntVector = std::vector<std::int64_t>;

/// v_{G,a}[i] counts the edges whose value pattern is rep_{q,k}(i).
inline IntVector profile_vector(const Hypergraph& g, const Assignment& a) {
  check_compatible(g, a);
  IntVector counts(checked_pow(a.domain(), g.arity()), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) ++counts[pattern_index(g, a, i)];
  return counts;
}

inline std::int64_t inner_product(const Predicate& p, const IntVector& v) {
  if (p.size() != v.size()) throw std::invalid_argument("inner product length mismatch");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) total += p[i] ? v[i] : 0;
  return total;
}

/// u_T[j] = 1 iff T and zeros(j) meet in neither the empty set nor all of [k].
inline IntVector u_vector(std::size_t k, PositionSet t) {
  const std::size_t size = checked_pow(2, k);
  const PositionSet full = full_positions(k);
  IntVector u(size, 0);
  for (std::size_t j = 0; j < size; ++j) {
    PositionSet meet = t & zeros_mask(k, j);
    u[j] = (meet != 0 && meet != full) ? 1 : 0;
  }
  return u;
}

/// lambda_{r,m} stored doubled: the numerator over the fixed denominator 2.
struct Coefficient {
  int numerator = 0;
  static constexpr int denominator = 2;
  Rational value() const { return Rational(numerator, denominator); }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

inline Coefficient lambda_coeff(std::size_t k, std::uint64_t r, std::uint64_t m) {
  const std::uint64_t size = checked_pow(2, k);
  if (r >= size || m >= size) throw std::out_of_range("lambda: index out of range");
  int exponent = std::popcount(r ^ m) + ((r & m) != 0 ? 0 : 1);
  return Coefficient{exponent % 2 == 0 ? 1 : -1};
}

/// 2 * sum_m lambda_{r,m} u_{T_m} with T_m = zeros(m), computed in integers.
inline IntVector reconstruct_basis_doubled(std::size_t k, std::size_t r) {
  if (k % 2 != 0) throw std::invalid_argument("basis reconstruction needs an even arity");
  const std::size_t size = checked_pow(2, k);
  if (r + 1 >= size)
    throw std::out_of_range("basis reconstruction is defined for r < 2^k - 1 only");
  const PositionSet full = full_positions(k);
  std::vector<PositionSet> zero_sets(size);
  for (std::size_t j = 0; j < size; ++j) zero_sets[j] = zeros_mask(k, j);

  IntVector sum(size, 0);
  for (std::size_t m = 0; m < size; ++m) {
    const int twice_lambda = lambda_coeff(k, r, m).numerator;
    const PositionSet t = zero_sets[m];
    for (std::size_t j = 0; j < size; ++j) {
      PositionSet meet = t & zero_sets[j];
      if (meet != 0 && meet != full) sum[j] += twice_lambda;
    }
  }
  return sum;
}

inline IntVector reconstruct_basis(std::size_t k, std::size_t r) {
  IntVector doubled = reconstruct_basis_doubled(k, r);
  for (auto& x : doubled) {
    if (x % 2 != 0) throw std::logic_error("reconstruction has a half-integer coordinate");
    x /= 2;
  }
  return doubled;
}

inline Rational lambda_sum(std::size_t k, std::size_t r) {
  const std::size_t size = checked_pow(2, k);
  std::int64_t doubled = 0;
  for (std::size_t m = 0; m < size; ++m) doubled += lambda_coeff(k, r, m).numerator;
  return Rational(doubled, 2);
}

/// Indices r with P true at rep(r); v_P is the sum of the e_r.
inline std::vector<std::size_t> singleton_decompose(const Predicate& p) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < p.size(); ++r)
    if (p[r]) out.push_back(r);
  return out;
}

/// The Boolean predicate P_T whose truth vector is u_T.
inline Predicate induced_predicate(std::size_t k, PositionSet t) {
  IntVector u = u_vector(k, t);
  std::vector<std::uint8_t> table(u.begin(), u.end());
  return Predicate(k, 2, std::move(table));
}

}  // namespace addsparse
