#pragma once

// Executable form of the clique counterexample: for G = K_n and the q-ary Cut
// (x != y), every proper nonempty subgraph is refuted by an assignment that
// only uses the values q-2 and q-1. Any bound that ignores the parts S_{q-2}
// and S_{q-1} is 0 on such assignments, so a strictly positive LHS is a
// violation.

#include "addsparse/hypergraph.hpp"
#include "addsparse/predicate.hpp"
#include "addsparse/random.hpp"
#include "addsparse/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace addsparse {

inline Hypergraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Hypergraph(n, 2, Orientation::undirected, edges);
}

enum class OptimalityCase { regular, irregular };

struct OptimalityWitness {
  std::vector<std::size_t> kept;  // edge indices of K_n
  OptimalityCase which = OptimalityCase::regular;
  Assignment assignment{3, {}};
  Rational margin{0};  // |scale Val_{G_eps} - Val_G| minus the (zero) bound
};

struct OptimalityRecord {
  std::size_t n = 0;
  std::size_t q = 0;
  bool exhaustive = true;
  std::uint64_t examined = 0;
  std::uint64_t violated = 0;
  std::uint64_t regular_cases = 0;
  std::uint64_t irregular_cases = 0;
  Rational min_margin{0};
  std::optional<OptimalityWitness> weakest;  // the examined subgraph with the smallest margin

  bool all_violated() const { return examined > 0 && violated == examined; }
};

/// |(|E|/|E_eps|) Val_{G_eps,Cut}(a) - Val_{G,Cut}(a)| for a subgraph of K_n.
inline Rational clique_cut_deviation(const Hypergraph& kn, const std::vector<std::size_t>& kept,
                                     const Assignment& a) {
  const Predicate cut = cut_predicate(2, a.domain());
  const Hypergraph sub = kn.subgraph(kept);
  Rational scale(static_cast<std::int64_t>(kn.edge_count()), static_cast<std::int64_t>(kept.size()));
  Rational diff = scale * value(sub, cut, a) - Rational(value(kn, cut, a));
  return diff < 0 ? -diff : diff;
}

/// The witness for one proper nonempty subgraph of K_n.
inline OptimalityWitness clique_witness(const Hypergraph& kn, std::size_t q,
                                        const std::vector<std::size_t>& kept) {
  const std::size_t n = kn.vertex_count();
  if (kept.empty() || kept.size() >= kn.edge_count())
    throw std::invalid_argument("the witness needs a proper nonempty subgraph");
  std::vector<std::int64_t> deg(n, 0);
  for (std::size_t i : kept)
    for (Vertex v : kn.edge(i)) ++deg[v];
  const Digit low = static_cast<Digit>(q - 2);
  const Digit high = static_cast<Digit>(q - 1);

  OptimalityWitness w;
  w.kept = kept;
  auto first_other = std::find_if(deg.begin(), deg.end(), [&](std::int64_t d) { return d != deg[0]; });
  if (first_other == deg.end()) {
    // Every vertex has the same degree d > 0: a(v_1) = a(v_2) = q-2.
    w.which = OptimalityCase::regular;
    std::vector<Digit> values(n, high);
    values[0] = values[1] = low;
    w.assignment = Assignment(q, values);
    w.margin = clique_cut_deviation(kn, kept, w.assignment);
    return w;
  }
  // Two vertices of different degree: one of the singleton-(q-2) assignments
  // deviates from |E|/|E_eps|.
  w.which = OptimalityCase::irregular;
  const std::size_t j = static_cast<std::size_t>(first_other - deg.begin());
  for (std::size_t vertex : {std::size_t{0}, j}) {
    std::vector<Digit> values(n, high);
    values[vertex] = low;
    Assignment a(q, values);
    Rational margin = clique_cut_deviation(kn, kept, a);
    if (margin > 0 || vertex == j) {
      w.assignment = a;
      w.margin = margin;
      if (margin > 0) break;
    }
  }
  return w;
}

/// Exhaustive over all proper nonempty subgraphs for n <= 5; otherwise
/// `samples` seeded random proper nonempty subgraphs.
inline OptimalityRecord optimality_counterexample(std::size_t n, std::size_t q,
                                                  std::uint64_t samples = 10000,
                                                  std::uint64_t seed = 1) {
  if (n < 3) throw std::invalid_argument("the clique argument needs n >= 3");
  if (q < 3) throw std::invalid_argument("the clique argument needs q >= 3");
  const Hypergraph kn = complete_graph(n);
  const std::size_t m = kn.edge_count();

  OptimalityRecord rec;
  rec.n = n;
  rec.q = q;
  rec.exhaustive = n <= 5;
  auto examine = [&](const std::vector<std::size_t>& kept) {
    OptimalityWitness w = clique_witness(kn, q, kept);
    ++rec.examined;
    if (w.margin > 0) ++rec.violated;
    (w.which == OptimalityCase::regular ? rec.regular_cases : rec.irregular_cases)++;
    if (!rec.weakest || w.margin < rec.min_margin) {
      rec.min_margin = w.margin;
      rec.weakest = std::move(w);
    }
  };

  std::vector<std::size_t> kept;
  if (rec.exhaustive) {
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      kept.clear();
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1U) kept.push_back(i);
      examine(kept);
    }
  } else {
    Rng rng = make_rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      do {
        kept.clear();
        for (std::size_t i = 0; i < m; ++i)
          if (rng() & 1U) kept.push_back(i);
      } while (kept.empty() || kept.size() == m);
      examine(kept);
    }
  }
  return rec;
}

}  // namespace addsparse
