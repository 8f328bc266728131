#pragma once

#include "addsparse/cover.hpp"
#include "addsparse/hypergraph.hpp"
#include "addsparse/predicate.hpp"
#include "addsparse/random.hpp"
#include "addsparse/rational.hpp"
#include "addsparse/sparsifier_types.hpp"
#include "addsparse/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace addsparse {

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Strategy { uniform, degree_weighted };

inline Strategy parse_strategy(std::string_view name) {
  if (name == "uniform") return Strategy::uniform;
  if (name == "degree" || name == "degree_weighted") return Strategy::degree_weighted;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

inline std::string to_string(Strategy s) {
  return s == Strategy::uniform ? "uniform" : "degree";
}

enum class CertifyMode { off, exhaustive, sampled };

inline CertifyMode parse_certify_mode(std::string_view name) {
  if (name == "off") return CertifyMode::off;
  if (name == "exhaustive") return CertifyMode::exhaustive;
  if (name == "sample" || name == "sampled") return CertifyMode::sampled;
  throw std::invalid_argument("unknown certification mode '" + std::string(name) + "'");
}

inline void check_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("epsilon must lie in (0, 1), got " + to_string(eps));
}

/// min(|E|, ceil(C n eps^-2 ln max(e, 1/eps))), at least 1 when |E| >= 1.
struct SizeBudget {
  double constant = 4.0;
  std::size_t target = 0;
};

inline SizeBudget size_budget(std::size_t n, std::size_t edges, const Rational& eps,
                              double constant) {
  check_epsilon(eps);
  if (!(constant > 0)) throw std::invalid_argument("size constant must be positive");
  const double e = to_double(eps);
  const double raw = constant * static_cast<double>(n) / (e * e) * std::log(std::max(std::numbers::e, 1.0 / e));
  SizeBudget b;
  b.constant = constant;
  double target = std::ceil(raw);
  b.target = target >= static_cast<double>(edges) ? edges : static_cast<std::size_t>(target);
  if (edges > 0) b.target = std::max<std::size_t>(b.target, 1);
  return b;
}

/// eps / q^k: the per-singleton error when one sparsifier has to serve a
/// predicate split into its q^k singletons.
inline Rational multi_predicate_epsilon(const Rational& eps, std::size_t k, std::size_t q) {
  check_epsilon(eps);
  return eps / static_cast<std::int64_t>(checked_pow(q, k));
}

/// p_e proportional to sum_{v in e} 1/deg(v), clamped to [0, 1] and scaled so
/// the probabilities sum to `target`.
inline std::vector<double> inclusion_probabilities(const Hypergraph& g, std::size_t target) {
  const std::size_t m = g.edge_count();
  std::vector<double> p(m, 0.0);
  if (m == 0 || target == 0) return p;
  if (target >= m) return std::vector<double>(m, 1.0);
  const auto deg = degree_profile(g).degrees;
  std::vector<double> w(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex v : g.edge(i))
      if (deg[v] > 0) w[i] += 1.0 / static_cast<double>(deg[v]);

  std::vector<bool> clamped(m, false);
  std::size_t clamped_count = 0;
  for (;;) {
    double free_weight = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (!clamped[i]) free_weight += w[i];
    const double c =
        free_weight > 0 ? static_cast<double>(target - clamped_count) / free_weight : 0.0;
    bool changed = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (clamped[i]) continue;
      if (c * w[i] >= 1.0) {
        clamped[i] = true;
        ++clamped_count;
        changed = true;
      }
    }
    if (!changed) {
      for (std::size_t i = 0; i < m; ++i) p[i] = clamped[i] ? 1.0 : c * w[i];
      return p;
    }
  }
}

/// Exactly `target` edges: uniform without replacement, or sequential Poisson
/// sampling (the `target` smallest u_e / p_e) for the degree-weighted scheme.
inline std::vector<std::size_t> sample_edges(const Hypergraph& g, std::size_t target,
                                             Strategy strategy, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const std::size_t m = g.edge_count();
  target = std::min(target, m);
  if (strategy == Strategy::uniform) return sample_without_replacement(rng, m, target);

  const auto p = inclusion_probabilities(g, target);
  std::vector<std::pair<double, std::size_t>> keys(m);
  for (std::size_t i = 0; i < m; ++i) {
    double u = uniform_unit(rng);
    keys[i] = {p[i] > 0 ? u / p[i] : INFINITY, i};
  }
  std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(target), keys.end());
  std::vector<std::size_t> kept(target);
  for (std::size_t i = 0; i < target; ++i) kept[i] = keys[i].second;
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct SparsifyOptions {
  Strategy strategy = Strategy::uniform;
  double constant = 4.0;
  CertifyMode certify = CertifyMode::exhaustive;
  std::size_t retries = 64;
  std::uint64_t trials = 10000;
  std::uint64_t state_cap = std::uint64_t{1} << 20;
  unsigned workers = 1;
  std::optional<std::size_t> budget;  // overrides the C n eps^-2 log(1/eps) target
  std::vector<std::size_t> domains{2};  // pipeline certification domains
};

namespace detail {

inline CertifyOptions certify_options(const SparsifyOptions& opt, std::uint64_t seed) {
  CertifyOptions c;
  c.enumeration = opt.certify == CertifyMode::sampled ? Enumeration::sampled : Enumeration::exhaustive;
  c.trials = opt.trials;
  c.seed = seed;
  c.state_cap = opt.state_cap;
  c.workers = opt.workers;
  return c;
}

inline CertificationRecord make_record(const CertReport& r, std::vector<std::size_t> domains) {
  CertificationRecord rec;
  rec.mode = to_string(r.enumeration);
  rec.max_margin = r.max_margin;
  rec.witness = r.witness;
  rec.checked = r.checked;
  rec.domains = std::move(domains);
  return rec;
}

}  // namespace detail

/// A cut sparsifier by sample-and-certify. With certification on, the result
/// satisfies |scale Val_{G_eps,Cut}(a) - Val_{G,Cut}(a)| <= eps (d_G |Z_a| + vol_G(Z_a))
/// on every checked assignment; seeds seed, seed+1, ... are tried.
inline Sparsifier cut_sparsify(const Hypergraph& g, const Rational& eps, std::uint64_t seed,
                               const SparsifyOptions& opt = {}) {
  check_epsilon(eps);
  if (g.empty()) throw std::invalid_argument("cannot sparsify a hypergraph without edges");
  const std::size_t m = g.edge_count();
  const std::size_t target =
      opt.budget ? std::clamp<std::size_t>(*opt.budget, 1, m)
                 : size_budget(g.vertex_count(), m, eps, opt.constant).target;
  const Predicate cut = cut_predicate(g.arity(), 2);
  const BoundSpec bound{BoundMode::boolean, eps};
  if (opt.certify == CertifyMode::exhaustive)
    detail::state_count(2, g.vertex_count(), opt.state_cap);  // throws above the cap

  const std::size_t attempts = std::max<std::size_t>(opt.retries, 1);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    Sparsifier sp = make_sparsifier(m, sample_edges(g, target, opt.strategy, seed + attempt), eps);
    sp.attempts = attempt + 1;
    if (opt.certify == CertifyMode::off) return sp;
    CertReport report = certify(g, sp, cut, bound, detail::certify_options(opt, seed + attempt));
    if (report.holds()) {
      sp.certified = detail::make_record(report, {2});
      return sp;
    }
  }
  throw CertificationError("no certified cut sparsifier found in " + std::to_string(attempts) +
                           " attempts");
}

/// The predicate-independent pipeline: odd arity is lifted by one extra
/// vertex, undirected input is directed by ascending vertex order, the
/// k-partite k-fold cover is formed and made undirected, a cut sparsifier is
/// sampled there, and its edges are pulled back to base edge indices.
///
/// Certification (when on) checks the result on the base instance against
/// every predicate of every domain in `opt.domains` at the requested eps, in
/// the Boolean bound for q = 2 and the all-but-one bound otherwise.
struct PipelineTrace {
  std::size_t lifted_arity = 0;
  std::size_t cover_vertices = 0;
  Rational inner_epsilon{0};
  std::size_t budget = 0;
};

inline Sparsifier sparsify(const Hypergraph& g, const Rational& eps, std::uint64_t seed,
                           const SparsifyOptions& opt = {}, PipelineTrace* trace = nullptr) {
  check_epsilon(eps);
  if (g.empty()) throw std::invalid_argument("cannot sparsify a hypergraph without edges");
  if (opt.domains.empty()) throw std::invalid_argument("at least one certification domain needed");

  Hypergraph working = directed_version(g);
  Rational inner = eps;
  if (working.arity() % 2 == 1) {
    const std::size_t k = working.arity();
    working = odd_lift(working, Predicate::constant(k, 2, false)).graph;
    inner = eps * Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k + 1));
  }
  const std::size_t q_max = *std::max_element(opt.domains.begin(), opt.domains.end());
  inner = multi_predicate_epsilon(inner, working.arity(), q_max);

  const Cover cov = cover(working);
  const UndirectedEquivalent lam = undirected_equivalent(cov.lifted);
  if (lam.merged_any) throw std::logic_error("cover edges collapsed under undirection");
  std::vector<std::size_t> cover_of_class(lam.graph.edge_count());
  for (std::size_t c = 0; c < lam.edge_class.size(); ++c) cover_of_class[lam.edge_class[c]] = c;

  const std::size_t m = g.edge_count();
  const std::size_t target =
      opt.budget ? std::clamp<std::size_t>(*opt.budget, 1, m)
                 : size_budget(g.vertex_count(), m, eps, opt.constant).target;
  if (trace) *trace = PipelineTrace{working.arity(), lam.graph.vertex_count(), inner, target};

  if (opt.certify == CertifyMode::exhaustive)
    for (std::size_t q : opt.domains) detail::state_count(q, g.vertex_count(), opt.state_cap);

  SparsifyOptions inner_opt = opt;
  inner_opt.certify = CertifyMode::off;
  inner_opt.retries = 1;
  inner_opt.budget = target;

  const std::size_t attempts = std::max<std::size_t>(opt.retries, 1);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const Sparsifier on_cover = cut_sparsify(lam.graph, inner, seed + attempt, inner_opt);
    std::vector<std::size_t> cover_edges;
    cover_edges.reserve(on_cover.kept.size());
    for (std::size_t cls : on_cover.kept) cover_edges.push_back(cover_of_class[cls]);
    Sparsifier sp = make_sparsifier(m, cov.pull_back(cover_edges), eps);
    sp.attempts = attempt + 1;
    if (opt.certify == CertifyMode::off) return sp;

    bool ok = true;
    std::optional<CertReport> worst;
    for (std::size_t q : opt.domains) {
      CertReport r = certify_all_predicates(g, sp, q, BoundSpec{natural_mode(q), eps},
                                            detail::certify_options(opt, seed + attempt));
      if (!worst || r.max_margin > worst->max_margin) worst = r;
      if (!r.holds()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      sp.certified = detail::make_record(*worst, opt.domains);
      return sp;
    }
  }
  throw CertificationError("no certified sparsifier found in " + std::to_string(attempts) +
                           " attempts");
}

/// Per-edge predicates: edges are grouped by label, each group is sparsified
/// at eps / m (m = number of distinct labels) and the kept edges are united.
struct LabeledSparsifier {
  Sparsifier combined;
  std::vector<std::string> labels;                  // distinct, sorted
  std::vector<std::vector<std::size_t>> members;    // base edge indices per label
  std::vector<Sparsifier> parts;                    // indices local to each group
};

inline LabeledSparsifier sparsify_labeled(const Hypergraph& g, const std::vector<std::string>& labels,
                                          const Rational& eps, std::uint64_t seed,
                                          const SparsifyOptions& opt = {}) {
  check_epsilon(eps);
  if (labels.size() != g.edge_count())
    throw std::invalid_argument("need one predicate label per edge");
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);

  LabeledSparsifier out;
  const Rational group_eps = eps / static_cast<std::int64_t>(groups.size());
  std::vector<std::size_t> kept;
  std::size_t attempts = 0;
  for (const auto& [label, members] : groups) {
    Hypergraph sub = g.subgraph(members);
    Sparsifier part = sparsify(sub, group_eps, seed, opt);
    for (std::size_t local : part.kept) kept.push_back(members[local]);
    attempts = std::max(attempts, part.attempts);
    out.labels.push_back(label);
    out.members.push_back(members);
    out.parts.push_back(std::move(part));
  }
  out.combined = make_sparsifier(g.edge_count(), std::move(kept), eps);
  out.combined.attempts = attempts;
  return out;
}

}  // namespace addsparse
