#pragma once

#include "addsparse/encoding.hpp"
#include "addsparse/predicate.hpp"
#include "addsparse/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace addsparse {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

enum class Orientation { directed, undirected };

/// An unweighted k-uniform hypergraph on the vertices [0, n).
///
/// Edges are ordered k-tuples and may repeat a vertex. Directed input with a
/// repeated tuple is rejected. Undirected input is canonicalised (each tuple
/// sorted) and duplicate canonical forms are merged, keeping the first
/// occurrence, so edge order follows first appearance.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::size_t k, Orientation orientation, const std::vector<Edge>& edges)
      : n_(n), k_(k), directed_(orientation == Orientation::directed) {
    if (k == 0) throw std::invalid_argument("hypergraph arity must be at least 1");
    std::map<Edge, std::size_t> seen;
    vertices_.reserve(edges.size() * k);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge e = edges[i];
      if (e.size() != k)
        throw std::invalid_argument("edge " + std::to_string(i) + " has " +
                                    std::to_string(e.size()) + " entries, expected " +
                                    std::to_string(k));
      for (Vertex v : e)
        if (v >= n)
          throw std::out_of_range("edge " + std::to_string(i) + " uses vertex " +
                                  std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
      if (!directed_) std::sort(e.begin(), e.end());
      auto [it, inserted] = seen.emplace(e, seen.size());
      if (!inserted) {
        if (directed_)
          throw std::invalid_argument("duplicate directed edge " + std::to_string(i) +
                                      " (same tuple as edge " + std::to_string(it->second) + ")");
        continue;
      }
      vertices_.insert(vertices_.end(), e.begin(), e.end());
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t arity() const { return k_; }
  bool directed() const { return directed_; }
  std::size_t edge_count() const { return k_ == 0 ? 0 : vertices_.size() / k_; }
  bool empty() const { return vertices_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return std::span<const Vertex>(vertices_).subspan(i * k_, k_);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) {
      auto e = edge(i);
      out.emplace_back(e.begin(), e.end());
    }
    return out;
  }

  /// The subhypergraph on the same vertices keeping the listed edge indices.
  Hypergraph subgraph(std::span<const std::size_t> kept) const {
    std::vector<Edge> sub;
    sub.reserve(kept.size());
    for (std::size_t i : kept) {
      if (i >= edge_count()) throw std::out_of_range("subgraph: edge index out of range");
      auto e = edge(i);
      sub.emplace_back(e.begin(), e.end());
    }
    return Hypergraph(n_, k_, directed_ ? Orientation::directed : Orientation::undirected, sub);
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 1;
  bool directed_ = true;
  std::vector<Vertex> vertices_;
};

/// A map from the vertices to the domain [q].
class Assignment {
 public:
  Assignment(std::size_t q, std::vector<Digit> values) : q_(q), values_(std::move(values)) {
    if (q < 2) throw std::invalid_argument("assignment domain size must be at least 2");
    for (std::size_t v = 0; v < values_.size(); ++v)
      if (values_[v] >= q)
        throw std::out_of_range("assignment value " + std::to_string(values_[v]) + " at vertex " +
                                std::to_string(v) + " is not below q = " + std::to_string(q));
  }

  static Assignment constant(std::size_t n, std::size_t q, Digit value) {
    return Assignment(q, std::vector<Digit>(n, value));
  }

  /// The i-th assignment of the base-q counter, vertex 0 least significant.
  static Assignment from_counter(std::size_t n, std::size_t q, std::uint64_t counter) {
    std::vector<Digit> values(n);
    for (std::size_t v = 0; v < n; ++v) {
      values[v] = static_cast<Digit>(counter % q);
      counter /= q;
    }
    return Assignment(q, std::move(values));
  }

  std::size_t domain() const { return q_; }
  std::size_t size() const { return values_.size(); }
  Digit operator[](std::size_t v) const { return values_[v]; }
  const std::vector<Digit>& values() const { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::size_t q_;
  std::vector<Digit> values_;
};

struct DegreeProfile {
  std::vector<std::int64_t> degrees;
  /// k|E|/n; empty when n = 0.
  std::optional<Rational> average;
};

inline DegreeProfile degree_profile(const Hypergraph& g) {
  DegreeProfile profile;
  profile.degrees.assign(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (Vertex v : g.edge(i)) ++profile.degrees[v];
  if (g.vertex_count() > 0)
    profile.average = Rational(static_cast<std::int64_t>(g.arity() * g.edge_count()),
                               static_cast<std::int64_t>(g.vertex_count()));
  return profile;
}

inline std::int64_t volume(const DegreeProfile& profile, std::span<const Vertex> subset) {
  std::int64_t total = 0;
  for (Vertex v : subset) {
    if (v >= profile.degrees.size())
      throw std::out_of_range("volume: vertex " + std::to_string(v) + " out of range");
    total += profile.degrees[v];
  }
  return total;
}

inline std::int64_t volume(const Hypergraph& g, std::span<const Vertex> subset) {
  return volume(degree_profile(g), subset);
}

inline std::vector<Vertex> part(const Assignment& a, Digit value) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] == value) out.push_back(static_cast<Vertex>(v));
  return out;
}

/// Z_a, the vertices mapped to 0.
inline std::vector<Vertex> zero_set(const Assignment& a) { return part(a, 0); }

/// M_a (largest part by size) and N_a (largest part by volume) among the
/// parts of the values 0..q-2; ties go to the smallest value.
struct PartExtremes {
  Digit size_value = 0;
  Digit volume_value = 0;
  std::vector<Vertex> largest;        // M_a
  std::vector<Vertex> heaviest;       // N_a
  std::int64_t heaviest_volume = 0;   // vol_G(N_a)
};

inline PartExtremes part_extremes(const DegreeProfile& profile, const Assignment& a) {
  const std::size_t q = a.domain();
  std::vector<std::size_t> sizes(q, 0);
  std::vector<std::int64_t> volumes(q, 0);
  for (std::size_t v = 0; v < a.size(); ++v) {
    ++sizes[a[v]];
    volumes[a[v]] += profile.degrees.at(v);
  }
  PartExtremes out;
  for (Digit i = 1; i + 1 < q; ++i) {
    if (sizes[i] > sizes[out.size_value]) out.size_value = i;
    if (volumes[i] > volumes[out.volume_value]) out.volume_value = i;
  }
  out.largest = part(a, out.size_value);
  out.heaviest = part(a, out.volume_value);
  out.heaviest_volume = volumes[out.volume_value];
  return out;
}

inline PartExtremes part_extremes(const Hypergraph& g, const Assignment& a) {
  if (a.size() != g.vertex_count())
    throw std::invalid_argument("assignment length does not match the vertex count");
  return part_extremes(degree_profile(g), a);
}

inline void check_compatible(const Hypergraph& g, const Assignment& a) {
  if (a.size() != g.vertex_count())
    throw std::invalid_argument("assignment has length " + std::to_string(a.size()) +
                                " but the hypergraph has " + std::to_string(g.vertex_count()) +
                                " vertices");
}

inline void check_compatible(const Hypergraph& g, const Predicate& p, const Assignment& a) {
  check_compatible(g, a);
  if (p.arity() != g.arity())
    throw std::invalid_argument("predicate arity " + std::to_string(p.arity()) +
                                " does not match hypergraph arity " + std::to_string(g.arity()));
  if (p.domain() != a.domain())
    throw std::invalid_argument("predicate domain " + std::to_string(p.domain()) +
                                " does not match assignment domain " +
                                std::to_string(a.domain()));
  if (!g.directed() && !p.symmetric())
    throw std::invalid_argument("value on an undirected hypergraph needs a symmetric predicate");
}

/// Index of the value pattern (a(v_1), ..., a(v_k)) of edge i in base q.
inline std::size_t pattern_index(const Hypergraph& g, const Assignment& a, std::size_t i) {
  std::size_t idx = 0;
  const std::size_t q = a.domain();
  for (Vertex v : g.edge(i)) idx = idx * q + a[v];
  return idx;
}

/// Val_{G,P}(a): the number of edges whose value pattern satisfies P.
inline std::int64_t value(const Hypergraph& g, const Predicate& p, const Assignment& a) {
  check_compatible(g, p, a);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) total += p[pattern_index(g, a, i)];
  return total;
}

}  // namespace addsparse
