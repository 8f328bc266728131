#pragma once

#include "addsparse/encoding.hpp"
#include "addsparse/hypergraph.hpp"
#include "addsparse/predicate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace addsparse {

/// Layer i copy of base vertex v in a cover over n base vertices.
inline Vertex cover_vertex(std::size_t n, std::size_t layer, Vertex v) {
  return static_cast<Vertex>(layer * n + v);
}

/// The k-partite k-fold cover. `base_edge[c]` is the base edge that cover edge
/// c was lifted from; for a directed base this is the identity.
struct Cover {
  std::size_t base_vertices = 0;
  std::size_t base_edges = 0;
  Hypergraph lifted;
  std::vector<std::size_t> base_edge;

  /// Base edge indices of a set of cover edges, sorted and deduplicated.
  std::vector<std::size_t> pull_back(std::span<const std::size_t> cover_edges) const {
    std::vector<std::size_t> out;
    out.reserve(cover_edges.size());
    for (std::size_t c : cover_edges) out.push_back(base_edge.at(c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Cover edges lifted from a set of base edges.
  std::vector<std::size_t> push_forward(std::span<const std::size_t> base) const {
    std::vector<bool> wanted(base_edges, false);
    for (std::size_t b : base) wanted.at(b) = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < base_edge.size(); ++c)
      if (wanted[base_edge[c]]) out.push_back(c);
    return out;
  }
};

/// gamma(G) for a directed G: edge (v_1, ..., v_k) becomes
/// (v_1^(0), ..., v_k^(k-1)), with v^(i) numbered i*n + v.
inline Cover cover(const Hypergraph& g) {
  if (!g.directed())
    throw std::invalid_argument("cover needs a directed hypergraph; direct the edges first");
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.arity();
  std::vector<Edge> lifted;
  lifted.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    Edge c(k);
    for (std::size_t pos = 0; pos < k; ++pos) c[pos] = cover_vertex(n, pos, e[pos]);
    lifted.push_back(std::move(c));
  }
  Cover out;
  out.base_vertices = n;
  out.base_edges = g.edge_count();
  out.lifted = Hypergraph(k * n, k, Orientation::directed, lifted);
  out.base_edge.resize(g.edge_count());
  std::iota(out.base_edge.begin(), out.base_edge.end(), std::size_t{0});
  return out;
}

/// The undirected-case cover: every ordering of each base edge is lifted, so
/// an edge on k distinct vertices yields k! cover edges (repeated vertices
/// yield fewer once duplicates merge).
inline Cover undirected_cover(const Hypergraph& g) {
  if (g.directed()) throw std::invalid_argument("undirected_cover needs an undirected hypergraph");
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.arity();
  std::vector<Edge> lifted;
  std::vector<std::size_t> origin;
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    Edge order(e.begin(), e.end());  // stored sorted, so this enumerates every ordering
    do {
      Edge c(k);
      for (std::size_t pos = 0; pos < k; ++pos) c[pos] = cover_vertex(n, pos, order[pos]);
      std::sort(c.begin(), c.end());
      if (seen.emplace(c, lifted.size()).second) {
        lifted.push_back(std::move(c));
        origin.push_back(i);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  Cover out;
  out.base_vertices = n;
  out.base_edges = g.edge_count();
  out.lifted = Hypergraph(k * n, k, Orientation::undirected, lifted);
  out.base_edge = std::move(origin);
  return out;
}

/// Lambda(G) together with the class of every directed edge.
struct UndirectedEquivalent {
  Hypergraph graph;
  std::vector<std::size_t> edge_class;  // directed edge index -> undirected edge index
  bool merged_any = false;
};

inline UndirectedEquivalent undirected_equivalent(const Hypergraph& g) {
  std::map<Edge, std::size_t> classes;
  std::vector<Edge> sets;
  UndirectedEquivalent out;
  out.edge_class.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    Edge s(e.begin(), e.end());
    std::sort(s.begin(), s.end());
    auto [it, inserted] = classes.emplace(s, sets.size());
    if (inserted)
      sets.push_back(std::move(s));
    else
      out.merged_any = true;
    out.edge_class.push_back(it->second);
  }
  out.graph = Hypergraph(g.vertex_count(), g.arity(), Orientation::undirected, sets);
  return out;
}

/// Directs an undirected hypergraph by ascending vertex order (the stored
/// canonical order); directed input is returned unchanged.
inline Hypergraph directed_version(const Hypergraph& g) {
  if (g.directed()) return g;
  return Hypergraph(g.vertex_count(), g.arity(), Orientation::directed, g.edges());
}

/// a'(v^(i)) = a(v) on the k * n cover vertices.
inline Assignment lift_uniform(const Assignment& a, std::size_t k) {
  const std::size_t n = a.size();
  std::vector<Digit> values(k * n);
  for (std::size_t layer = 0; layer < k; ++layer)
    for (std::size_t v = 0; v < n; ++v) values[layer * n + v] = a[v];
  return Assignment(a.domain(), std::move(values));
}

/// a_T(v^(i)) = 0 iff i is in T and a(v) = 0.
inline Assignment lift_subset(const Assignment& a, std::size_t k, PositionSet t) {
  if (a.domain() != 2) throw std::invalid_argument("lift_subset needs a Boolean assignment");
  const std::size_t n = a.size();
  std::vector<Digit> values(k * n, 1);
  for (std::size_t layer = 0; layer < k; ++layer) {
    if (!((t >> layer) & 1U)) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (a[v] == 0) values[layer * n + v] = 0;
  }
  return Assignment(2, std::move(values));
}

/// Positions where the pattern rep_{q,k}(r) takes the excluded value q-1.
inline PositionSet top_positions(std::size_t q, std::size_t k, std::size_t r) {
  std::vector<Digit> pattern = rep(q, k, r);
  PositionSet t = 0;
  for (std::size_t pos = 0; pos < k; ++pos)
    if (pattern[pos] == q - 1) t |= PositionSet{1} << pos;
  return t;
}

/// The Boolean assignment a_r on the cover that reduces the singleton e_r on
/// [q] to the Boolean singleton P_r. Never assigns 0 to a copy of a vertex
/// with a(v) = q-1.
inline Assignment lift_singleton(const Assignment& a, std::size_t r, std::size_t k) {
  const std::size_t q = a.domain();
  const std::size_t n = a.size();
  std::vector<Digit> pattern = rep(q, k, r);
  const PositionSet t = top_positions(q, k, r);
  std::vector<Digit> values(k * n, 1);
  for (std::size_t layer = 0; layer < k; ++layer) {
    const bool in_t = (t >> layer) & 1U;
    for (std::size_t v = 0; v < n; ++v) {
      bool zero = in_t ? a[v] != q - 1 : a[v] == pattern[layer];
      if (zero) values[layer * n + v] = 0;
    }
  }
  return Assignment(2, std::move(values));
}

/// P_r: the Boolean singleton true exactly at b with b_i = 1 iff i is in T.
inline Predicate target_boolean_singleton(std::size_t r, std::size_t q, std::size_t k) {
  const PositionSet t = top_positions(q, k, r);
  std::vector<Digit> bits(k);
  for (std::size_t pos = 0; pos < k; ++pos) bits[pos] = (t >> pos) & 1U;
  return singleton_predicate(k, 2, index(2, bits));
}

/// G' with a new vertex v_0 = n appended to every edge, and
/// P'(b, x) = P(b) if x = 1, else 0. Edge i of G' comes from edge i of G.
struct OddLift {
  Hypergraph graph;
  Predicate predicate;
  Vertex extra_vertex;
};

inline OddLift odd_lift(const Hypergraph& g, const Predicate& p) {
  if (p.arity() != g.arity()) throw std::invalid_argument("odd_lift: arity mismatch");
  const std::size_t k = g.arity();
  const std::size_t q = p.domain();
  const Vertex extra = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    Edge lifted(e.begin(), e.end());
    lifted.push_back(extra);
    edges.push_back(std::move(lifted));
  }
  std::vector<std::uint8_t> table(checked_pow(q, k + 1), 0);
  for (std::size_t i = 0; i < p.size(); ++i) table[i * q + 1] = p[i] ? 1 : 0;
  return OddLift{Hypergraph(g.vertex_count() + 1, k + 1, Orientation::directed, edges),
                 Predicate(k + 1, q, std::move(table)), extra};
}

/// a' = a extended by a'(v_0) = 1.
inline Assignment odd_lift_assignment(const Assignment& a) {
  std::vector<Digit> values = a.values();
  values.push_back(1);
  return Assignment(a.domain(), std::move(values));
}

}  // namespace addsparse
