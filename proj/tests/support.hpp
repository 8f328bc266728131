#pragma once

#include "addsparse/addsparse.hpp"
#include "oracle.hpp"

#include <vector>

namespace testing_support {

using namespace addsparse;

inline oracle::Edges edges_of(const Hypergraph& g) {
  oracle::Edges out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

inline oracle::Table table_of(const Predicate& p) {
  return oracle::Table(p.table().begin(), p.table().end());
}

inline oracle::Values values_of(const Assignment& a) {
  return oracle::Values(a.values().begin(), a.values().end());
}

inline oracle::Frac frac(const Rational& r) { return oracle::Frac(r.numerator(), r.denominator()); }

/// The seven-vertex, eleven-edge directed reference graph (0-indexed).
inline Hypergraph reference_graph() {
  return Hypergraph(7, 2, Orientation::directed,
                    {{0, 1}, {1, 2}, {0, 3}, {3, 5}, {3, 6}, {4, 3}, {3, 2}, {1, 5}, {1, 6}, {5, 4}, {6, 5}});
}

inline Assignment reference_assignment() { return Assignment(2, {0, 0, 0, 1, 1, 1, 1}); }

/// A random directed instance with m <= available edges.
inline Hypergraph random_instance(Rng& rng, std::size_t n, std::size_t k, std::size_t m) {
  return generate(n, k, std::min<std::uint64_t>(m, available_edges(n, k, true)), rng(), true);
}

}  // namespace testing_support
