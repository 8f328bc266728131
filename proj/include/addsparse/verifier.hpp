#pragma once

// Exact evaluation of the additive error bound
//
//   | (|E|/|E_eps|) Val_{G_eps,P}(a) - Val_{G,P}(a) |  <=  eps (d_G |M_a| + vol_G(N_a))
//
// over all (or sampled) assignments. In Boolean mode M_a = N_a = Z_a. The
// comparison is carried out on integers after clearing the denominators
// |E_eps| * n * den(eps); only maxima are turned back into rationals.

#include "addsparse/encoding.hpp"
#include "addsparse/hypergraph.hpp"
#include "addsparse/predicate.hpp"
#include "addsparse/random.hpp"
#include "addsparse/rational.hpp"
#include "addsparse/sparsifier_types.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace addsparse {

enum class BoundMode { boolean, all_but_one };

inline std::string to_string(BoundMode mode) {
  return mode == BoundMode::boolean ? "boolean" : "all-but-one";
}

struct BoundSpec {
  BoundMode mode = BoundMode::boolean;
  Rational epsilon{1};
};

enum class Enumeration { exhaustive, sampled };

inline std::string to_string(Enumeration e) {
  return e == Enumeration::exhaustive ? "exhaustive" : "sampled";
}

struct CertifyOptions {
  Enumeration enumeration = Enumeration::exhaustive;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 7;
  std::uint64_t state_cap = std::uint64_t{1} << 20;  // q^n limit for exhaustive runs
  unsigned workers = 1;
};

/// Smallest eps making every checked assignment satisfy the bound.
struct FeasibleEpsilon {
  bool infinite = false;
  Rational value{0};
};

inline std::string to_string(const FeasibleEpsilon& f) {
  return f.infinite ? std::string("inf") : to_string(f.value);
}

struct CertReport {
  BoundMode mode = BoundMode::boolean;
  Enumeration enumeration = Enumeration::exhaustive;
  Rational epsilon{0};
  Rational max_margin{0};  // max over checked a of LHS - RHS; > 0 is a violation
  Assignment witness{2, {}};
  std::uint64_t checked = 0;
  FeasibleEpsilon min_feasible;

  bool holds() const { return max_margin <= 0; }
};

inline void check_mode(BoundMode mode, std::size_t q) {
  if (q < 2) throw std::invalid_argument("domain size must be at least 2");
  if (mode == BoundMode::boolean && q != 2)
    throw std::invalid_argument("boolean bound mode needs q = 2; use all-but-one");
}

/// eps (d_G |M_a| + vol_G(N_a)), or eps (d_G |Z_a| + vol_G(Z_a)) in Boolean mode.
inline Rational error_bound(const Hypergraph& g, const Assignment& a, const BoundSpec& bound) {
  check_compatible(g, a);
  check_mode(bound.mode, a.domain());
  DegreeProfile profile = degree_profile(g);
  if (!profile.average) return Rational(0);
  PartExtremes ex = part_extremes(profile, a);
  return bound.epsilon * (*profile.average * static_cast<std::int64_t>(ex.largest.size()) +
                         Rational(ex.heaviest_volume));
}

namespace detail {

using Wide = __int128;

inline std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("exact bound arithmetic overflowed 64 bits");
  return static_cast<std::int64_t>(x);
}

inline Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

inline Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Rational make_rational(Wide num, Wide den) {
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

/// Per-assignment evaluation of one (G, G_eps, bound) instance. Immutable
/// after construction; each worker owns a Scratch.
class BoundEvaluator {
 public:
  struct Scratch {
    std::vector<std::int64_t> full, kept;
    std::vector<std::int64_t> sizes, volumes;
  };

  struct Result {
    Wide margin_num = 0;  // margin * denominator()
    Wide lhs_num = 0;     // LHS * |E_eps|
    Wide weight = 0;      // k|E| |M_a| + n vol(N_a), so RHS = eps * weight / n
  };

  BoundEvaluator(const Hypergraph& g, const Sparsifier& sp, const BoundSpec& bound,
                 const Predicate* predicate, std::size_t q)
      : g_(g), predicate_(predicate), q_(q), mode_(bound.mode) {
    check_mode(bound.mode, q);
    if (sp.base_edge_count != g.edge_count())
      throw std::invalid_argument("sparsifier was built for " +
                                  std::to_string(sp.base_edge_count) + " edges, graph has " +
                                  std::to_string(g.edge_count()));
    if (predicate) {
      if (predicate->arity() != g.arity() || predicate->domain() != q)
        throw std::invalid_argument("predicate arity/domain does not match the instance");
      if (!g.directed() && !predicate->symmetric())
        throw std::invalid_argument("undirected hypergraph needs a symmetric predicate");
    }
    if (bound.epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
    patterns_ = checked_pow(q, g.arity());
    kept_mask_.assign(g.edge_count(), 0);
    for (std::size_t i : sp.kept) kept_mask_.at(i) = 1;
    n_ = static_cast<Wide>(g.vertex_count());
    edges_ = static_cast<Wide>(g.edge_count());
    kept_ = std::max<Wide>(static_cast<Wide>(sp.kept.size()), 1);
    eps_num_ = bound.epsilon.numerator();
    eps_den_ = bound.epsilon.denominator();
    degrees_ = degree_profile(g).degrees;
    denominator_ = kept_ * eps_den_ * std::max<Wide>(n_, 1);
  }

  Wide denominator() const { return denominator_; }
  Wide kept_edges() const { return kept_; }
  Wide vertices() const { return n_; }

  Scratch scratch() const {
    return Scratch{std::vector<std::int64_t>(patterns_), std::vector<std::int64_t>(patterns_),
                   std::vector<std::int64_t>(q_), std::vector<std::int64_t>(q_)};
  }

  Result evaluate(std::span<const Digit> a, Scratch& s) const {
    const std::size_t k = g_.arity();
    Wide lhs = 0;
    if (predicate_) {
      Wide full = 0, kept = 0;
      for (std::size_t i = 0; i < g_.edge_count(); ++i) {
        std::size_t idx = 0;
        for (Vertex v : g_.edge(i)) idx = idx * q_ + a[v];
        if ((*predicate_)[idx]) {
          ++full;
          kept += kept_mask_[i];
        }
      }
      lhs = wide_abs(edges_ * kept - kept_ * full);
    } else {
      // Worst predicate: take every pattern where the rescaled sparsifier
      // over-counts, or every one where it under-counts.
      std::fill(s.full.begin(), s.full.end(), 0);
      std::fill(s.kept.begin(), s.kept.end(), 0);
      for (std::size_t i = 0; i < g_.edge_count(); ++i) {
        std::size_t idx = 0;
        for (Vertex v : g_.edge(i)) idx = idx * q_ + a[v];
        ++s.full[idx];
        s.kept[idx] += kept_mask_[i];
      }
      Wide over = 0, under = 0;
      for (std::size_t j = 0; j < patterns_; ++j) {
        Wide d = edges_ * s.kept[j] - kept_ * s.full[j];
        if (d > 0)
          over += d;
        else
          under -= d;
      }
      lhs = std::max(over, under);
    }

    std::fill(s.sizes.begin(), s.sizes.end(), 0);
    std::fill(s.volumes.begin(), s.volumes.end(), 0);
    for (std::size_t v = 0; v < a.size(); ++v) {
      ++s.sizes[a[v]];
      s.volumes[a[v]] += degrees_[v];
    }
    // Boolean mode is the q = 2 case of the all-but-one bound.
    std::int64_t largest = 0, heaviest = 0;
    for (std::size_t i = 0; i + 1 < q_; ++i) {
      largest = std::max(largest, s.sizes[i]);
      heaviest = std::max(heaviest, s.volumes[i]);
    }
    Result r;
    r.lhs_num = lhs;
    r.weight = static_cast<Wide>(k) * edges_ * largest + n_ * heaviest;
    r.margin_num = lhs * eps_den_ * n_ - eps_num_ * r.weight * kept_;
    return r;
  }

 private:
  const Hypergraph& g_;
  const Predicate* predicate_;
  std::size_t q_;
  BoundMode mode_;
  std::size_t patterns_ = 0;
  std::vector<std::uint8_t> kept_mask_;
  std::vector<std::int64_t> degrees_;
  Wide n_ = 0, edges_ = 0, kept_ = 1, eps_num_ = 0, eps_den_ = 1, denominator_ = 1;
};

struct Partial {
  bool any = false;
  Wide best_margin = 0;
  std::uint64_t best_index = 0;
  std::vector<Digit> best_assignment;
  // Max of lhs_num * n / (|E_eps| * weight), kept as a fraction.
  bool infinite = false;
  Wide ratio_num = 0, ratio_den = 1;
  std::uint64_t checked = 0;

  void observe(const BoundEvaluator& ev, const BoundEvaluator::Result& r, std::uint64_t index,
               std::span<const Digit> a) {
    ++checked;
    if (!any || r.margin_num > best_margin || (r.margin_num == best_margin && index < best_index)) {
      any = true;
      best_margin = r.margin_num;
      best_index = index;
      best_assignment.assign(a.begin(), a.end());
    }
    if (r.lhs_num == 0 || infinite) return;
    if (r.weight == 0) {
      infinite = true;
      return;
    }
    Wide num = r.lhs_num * ev.vertices();
    Wide den = ev.kept_edges() * r.weight;
    if (num * ratio_den > ratio_num * den) {
      Wide g = wide_gcd(num, den);
      ratio_num = num / g;
      ratio_den = den / g;
    }
  }

  void merge(const Partial& o) {
    if (o.any && (!any || o.best_margin > best_margin ||
                  (o.best_margin == best_margin && o.best_index < best_index))) {
      any = true;
      best_margin = o.best_margin;
      best_index = o.best_index;
      best_assignment = o.best_assignment;
    }
    infinite = infinite || o.infinite;
    if (o.ratio_num * ratio_den > ratio_num * o.ratio_den) {
      ratio_num = o.ratio_num;
      ratio_den = o.ratio_den;
    }
    checked += o.checked;
  }
};

inline std::uint64_t state_count(std::size_t q, std::size_t n, std::uint64_t cap) {
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (states > cap / q)
      throw std::length_error("exhaustive enumeration needs q^n = " + std::to_string(q) + "^" +
                              std::to_string(n) + " states, above the cap of " +
                              std::to_string(cap) + "; use sampled certification");
    states *= q;
  }
  return states;
}

inline Partial enumerate_range(const BoundEvaluator& ev, std::size_t n, std::size_t q,
                               std::uint64_t begin, std::uint64_t end) {
  Partial part;
  if (begin >= end) return part;
  auto scratch = ev.scratch();
  std::vector<Digit> digits(n);
  std::uint64_t c = begin;
  for (std::size_t v = 0; v < n; ++v) {
    digits[v] = static_cast<Digit>(c % q);
    c /= q;
  }
  for (std::uint64_t index = begin; index < end; ++index) {
    part.observe(ev, ev.evaluate(digits, scratch), index, digits);
    for (std::size_t v = 0; v < n; ++v) {
      if (++digits[v] < q) break;
      digits[v] = 0;
    }
  }
  return part;
}

template <class Job>
Partial run_partitioned(std::uint64_t total, unsigned workers, Job&& job) {
  workers = std::max(1U, workers);
  if (workers == 1 || total < 2 * workers) return job(0, total);
  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t b = std::min<std::uint64_t>(total, w * chunk);
    std::uint64_t e = std::min<std::uint64_t>(total, b + chunk);
    threads.emplace_back([&, w, b, e] { parts[w] = job(b, e); });
  }
  for (auto& t : threads) t.join();
  Partial out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

inline CertReport run_certification(const Hypergraph& g, const Sparsifier& sp,
                                    const Predicate* predicate, std::size_t q,
                                    const BoundSpec& bound, const CertifyOptions& opt) {
  BoundEvaluator ev(g, sp, bound, predicate, q);
  const std::size_t n = g.vertex_count();
  Partial result;
  if (opt.enumeration == Enumeration::exhaustive) {
    const std::uint64_t states = state_count(q, n, opt.state_cap);
    result = run_partitioned(states, opt.workers, [&](std::uint64_t b, std::uint64_t e) {
      return enumerate_range(ev, n, q, b, e);
    });
  } else {
    Rng rng = make_rng(opt.seed);
    std::vector<Digit> samples(n * opt.trials);
    for (auto& d : samples) d = static_cast<Digit>(uniform_below(rng, q));
    result = run_partitioned(opt.trials, opt.workers, [&](std::uint64_t b, std::uint64_t e) {
      Partial part;
      auto scratch = ev.scratch();
      for (std::uint64_t t = b; t < e; ++t) {
        std::span<const Digit> a(samples.data() + t * n, n);
        part.observe(ev, ev.evaluate(a, scratch), t, a);
      }
      return part;
    });
  }
  CertReport report;
  report.mode = bound.mode;
  report.enumeration = opt.enumeration;
  report.epsilon = bound.epsilon;
  report.checked = result.checked;
  if (result.any) {
    report.max_margin = make_rational(result.best_margin, ev.denominator());
    report.witness = Assignment(q, result.best_assignment);
  }
  report.min_feasible.infinite = result.infinite;
  if (!result.infinite) report.min_feasible.value = make_rational(result.ratio_num, result.ratio_den);
  return report;
}

}  // namespace detail

/// LHS - RHS of the bound at one assignment; <= 0 means the bound holds there.
inline Rational check_assignment(const Hypergraph& g, const Sparsifier& sp, const Predicate& p,
                                 const Assignment& a, const BoundSpec& bound) {
  check_compatible(g, p, a);
  detail::BoundEvaluator ev(g, sp, bound, &p, a.domain());
  auto scratch = ev.scratch();
  auto r = ev.evaluate(a.values(), scratch);
  return detail::make_rational(r.margin_num, ev.denominator());
}

/// Checks the bound for one predicate over all q^n assignments (exhaustive)
/// or over `trials` seeded uniform assignments (sampled, not conclusive).
inline CertReport certify(const Hypergraph& g, const Sparsifier& sp, const Predicate& p,
                          const BoundSpec& bound, const CertifyOptions& opt = {}) {
  return detail::run_certification(g, sp, &p, p.domain(), bound, opt);
}

/// Checks the bound simultaneously for every predicate [q]^k -> {0,1}: at each
/// assignment the worst predicate is the set of patterns where the rescaled
/// sparsifier over-counts (or the set where it under-counts).
inline CertReport certify_all_predicates(const Hypergraph& g, const Sparsifier& sp, std::size_t q,
                                         const BoundSpec& bound, const CertifyOptions& opt = {}) {
  return detail::run_certification(g, sp, nullptr, q, bound, opt);
}

inline FeasibleEpsilon min_feasible_epsilon(const Hypergraph& g, const Sparsifier& sp,
                                            const Predicate& p, BoundMode mode,
                                            const CertifyOptions& opt = {}) {
  return certify(g, sp, p, BoundSpec{mode, Rational(0)}, opt).min_feasible;
}

inline FeasibleEpsilon min_feasible_epsilon_all(const Hypergraph& g, const Sparsifier& sp,
                                                std::size_t q, BoundMode mode,
                                                const CertifyOptions& opt = {}) {
  return certify_all_predicates(g, sp, q, BoundSpec{mode, Rational(0)}, opt).min_feasible;
}

/// The bound mode a domain size calls for: Boolean for q = 2, else all-but-one.
inline BoundMode natural_mode(std::size_t q) {
  return q == 2 ? BoundMode::boolean : BoundMode::all_but_one;
}

}  // namespace addsparse
