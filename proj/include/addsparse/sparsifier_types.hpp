#pragma once

#include "addsparse/hypergraph.hpp"
#include "addsparse/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace addsparse {

struct CertificationRecord {
  std::string mode;  // "exhaustive" or "sampled"
  Rational max_margin;
  Assignment witness{2, {}};
  std::uint64_t checked = 0;
  std::vector<std::size_t> domains;  // domain sizes the kept set was certified for
};

/// A subhypergraph G_eps given by the indices of the kept base edges.
struct Sparsifier {
  std::size_t base_edge_count = 0;
  std::vector<std::size_t> kept;  // sorted, unique
  Rational scale{1};              // |E| / |E_eps|
  Rational epsilon{0};
  std::size_t attempts = 1;
  std::optional<CertificationRecord> certified;

  std::size_t kept_count() const { return kept.size(); }
  bool is_identity() const { return kept.size() == base_edge_count; }
};

inline Sparsifier make_sparsifier(std::size_t base_edge_count, std::vector<std::size_t> kept,
                                  Rational epsilon) {
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (!kept.empty() && kept.back() >= base_edge_count)
    throw std::out_of_range("kept edge index " + std::to_string(kept.back()) +
                            " is not a base edge");
  if (base_edge_count > 0 && kept.empty())
    throw std::invalid_argument("a sparsifier of a nonempty hypergraph keeps at least one edge");
  Sparsifier sp;
  sp.base_edge_count = base_edge_count;
  sp.kept = std::move(kept);
  sp.scale = base_edge_count == 0
                 ? Rational(1)
                 : Rational(static_cast<std::int64_t>(base_edge_count),
                            static_cast<std::int64_t>(sp.kept.size()));
  sp.epsilon = epsilon;
  return sp;
}

inline Sparsifier identity_sparsifier(std::size_t base_edge_count, Rational epsilon = Rational(0)) {
  std::vector<std::size_t> all(base_edge_count);
  for (std::size_t i = 0; i < base_edge_count; ++i) all[i] = i;
  return make_sparsifier(base_edge_count, std::move(all), epsilon);
}

}  // namespace addsparse
