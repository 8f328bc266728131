#pragma once

// Seeded random instances: m distinct edges drawn uniformly from all tuples of
// distinct vertices (directed) or all k-subsets (undirected).

#include "addsparse/hypergraph.hpp"
#include "addsparse/predicate.hpp"
#include "addsparse/random.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace addsparse {

/// n!/(n-k)! for directed, C(n,k) for undirected; saturates at uint64 max.
inline std::uint64_t available_edges(std::size_t n, std::size_t k, bool directed) {
  if (k > n) return 0;
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t f = n - i;
    if (count > top / f) return top;
    count *= f;
  }
  if (!directed)
    for (std::size_t i = 2; i <= k; ++i) count /= i;
  return count;
}

namespace detail {

/// The idx-th tuple of distinct vertices in lexicographic order.
inline Edge unrank_tuple(std::size_t n, std::size_t k, std::uint64_t idx) {
  std::vector<Vertex> pool(n);
  for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<Vertex>(v);
  std::vector<std::uint64_t> radix(k);
  for (std::size_t i = 0; i < k; ++i) radix[i] = available_edges(n - i - 1, k - i - 1, true);
  Edge e(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t pick = idx / radix[i];
    idx %= radix[i];
    e[i] = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return e;
}

/// The idx-th k-subset in lexicographic order, as an increasing tuple.
inline Edge unrank_subset(std::size_t n, std::size_t k, std::uint64_t idx) {
  Edge e;
  Vertex v = 0;
  for (std::size_t left = k; left > 0; ++v) {
    const std::uint64_t with_v = available_edges(n - v - 1, left - 1, false);
    if (idx < with_v) {
      e.push_back(v);
      --left;
    } else {
      idx -= with_v;
    }
  }
  return e;
}

}  // namespace detail

inline Hypergraph generate(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed,
                           bool directed = true) {
  if (k == 0) throw std::invalid_argument("arity must be at least 1");
  const std::uint64_t avail = available_edges(n, k, directed);
  if (m > avail)
    throw std::invalid_argument("requested " + std::to_string(m) + " edges but only " +
                                std::to_string(avail) + " distinct ones exist");
  Rng rng = make_rng(seed);
  std::vector<std::uint64_t> ranks;
  if (avail <= (std::uint64_t{1} << 22)) {
    ranks = std::vector<std::uint64_t>();
    for (std::size_t i : sample_without_replacement(rng, static_cast<std::size_t>(avail), m)) ranks.push_back(i);
    // keep the edge order random rather than sorted
    for (std::size_t i = ranks.size(); i > 1; --i) std::swap(ranks[i - 1], ranks[uniform_below(rng, i)]);
  } else {
    std::set<std::uint64_t> seen;
    while (ranks.size() < m) {
      const std::uint64_t r = uniform_below(rng, avail);
      if (seen.insert(r).second) ranks.push_back(r);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t r : ranks)
    edges.push_back(directed ? detail::unrank_tuple(n, k, r) : detail::unrank_subset(n, k, r));
  return Hypergraph(n, k, directed ? Orientation::directed : Orientation::undirected, edges);
}

/// Uniformly random table; symmetric tables are only guaranteed when `symmetric`.
inline Predicate random_predicate(std::size_t k, std::size_t q, Rng& rng, bool symmetric = false) {
  const std::size_t size = checked_pow(q, k);
  std::vector<std::uint8_t> table(size, 0);
  if (!symmetric) {
    for (auto& b : table) b = static_cast<std::uint8_t>(rng() & 1U);
    return Predicate(k, q, std::move(table));
  }
  // one coin per multiset of values
  std::vector<int> coin(size, -1);
  for (std::size_t i = 0; i < size; ++i) {
    auto digits = rep(q, k, i);
    std::sort(digits.begin(), digits.end());
    const std::size_t canon = index(q, digits);
    if (coin[canon] < 0) coin[canon] = static_cast<int>(rng() & 1U);
    table[i] = static_cast<std::uint8_t>(coin[canon]);
  }
  return Predicate(k, q, std::move(table));
}

inline Assignment random_assignment(std::size_t n, std::size_t q, Rng& rng) {
  std::vector<Digit> values(n);
  for (auto& x : values) x = static_cast<Digit>(uniform_below(rng, q));
  return Assignment(q, std::move(values));
}

}  // namespace addsparse
