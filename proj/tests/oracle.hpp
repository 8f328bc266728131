#pragma once

// Brute-force reference implementations for the tests. They work on raw edge
// lists and tables and share no code with the library beyond the rational type.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

namespace oracle {

using Frac = boost::rational<long long>;
using Edges = std::vector<std::vector<unsigned>>;
using Table = std::vector<int>;
using Values = std::vector<unsigned>;

inline std::size_t power(std::size_t q, std::size_t k) {
  std::size_t p = 1;
  while (k--) p *= q;
  return p;
}

/// Most significant digit first.
inline Values digits(std::size_t q, std::size_t k, std::size_t i) {
  Values d(k);
  for (std::size_t l = k; l-- > 0;) {
    d[l] = static_cast<unsigned>(i % q);
    i /= q;
  }
  return d;
}

inline std::size_t pattern(std::size_t q, const std::vector<unsigned>& e, const Values& a) {
  std::size_t idx = 0;
  for (unsigned v : e) idx = idx * q + a[v];
  return idx;
}

inline long long val(const Edges& edges, const Table& table, std::size_t q, const Values& a) {
  long long s = 0;
  for (const auto& e : edges) s += table[pattern(q, e, a)];
  return s;
}

inline std::vector<long long> profile(const Edges& edges, std::size_t q, std::size_t k, const Values& a) {
  std::vector<long long> v(power(q, k), 0);
  for (const auto& e : edges) ++v[pattern(q, e, a)];
  return v;
}

inline Table cut_table(std::size_t q, std::size_t k) {
  Table t(power(q, k));
  for (std::size_t i = 0; i < t.size(); ++i) {
    Values d = digits(q, k, i);
    t[i] = std::all_of(d.begin(), d.end(), [&](unsigned x) { return x == d[0]; }) ? 0 : 1;
  }
  return t;
}

inline std::vector<long long> degrees(std::size_t n, const Edges& edges) {
  std::vector<long long> d(n, 0);
  for (const auto& e : edges)
    for (unsigned v : e) ++d[v];
  return d;
}

/// Calls f(a) for every a in [q]^n.
template <class F>
void for_each_assignment(std::size_t n, std::size_t q, F&& f) {
  Values a(n, 0);
  for (;;) {
    f(static_cast<const Values&>(a));
    std::size_t i = 0;
    while (i < n && ++a[i] == q) a[i++] = 0;
    if (i == n) return;
  }
}

inline Edges pick(const Edges& edges, const std::vector<std::size_t>& kept) {
  Edges out;
  for (std::size_t i : kept) out.push_back(edges[i]);
  return out;
}

/// | (|E|/|E_eps|) Val_{G_eps} - Val_G |
inline Frac lhs(const Edges& g, const Edges& sub, const Table& t, std::size_t q, const Values& a) {
  Frac d = Frac(static_cast<long long>(g.size()), static_cast<long long>(sub.size())) * val(sub, t, q, a) -
           Frac(val(g, t, q, a));
  return d < 0 ? -d : d;
}

/// eps (d |M_a| + vol(N_a)) with M_a, N_a the largest parts by size and by
/// volume among values 0..q-2 (smallest value on ties).
inline Frac rhs(std::size_t n, const Edges& g, std::size_t q, std::size_t k, const Values& a, Frac eps) {
  auto deg = degrees(n, g);
  Frac avg = n == 0 ? Frac(0) : Frac(static_cast<long long>(k * g.size()), static_cast<long long>(n));
  long long best_size = -1, best_vol = -1;
  for (unsigned value = 0; value + 1 < q; ++value) {
    long long size = 0, vol = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (a[v] == value) {
        ++size;
        vol += deg[v];
      }
    best_size = std::max(best_size, size);
    best_vol = std::max(best_vol, vol);
  }
  return eps * (avg * best_size + Frac(best_vol));
}

/// Largest LHS - RHS over all q^n assignments.
inline Frac max_margin(std::size_t n, const Edges& g, const std::vector<std::size_t>& kept,
                       const Table& t, std::size_t q, std::size_t k, Frac eps) {
  const Edges sub = pick(g, kept);
  bool first = true;
  Frac best(0);
  for_each_assignment(n, q, [&](const Values& a) {
    Frac m = lhs(g, sub, t, q, a) - rhs(n, g, q, k, a, eps);
    if (first || m > best) best = m;
    first = false;
  });
  return best;
}

/// Max over every predicate table of max_margin; only for tiny q^k.
inline Frac max_margin_all_tables(std::size_t n, const Edges& g, const std::vector<std::size_t>& kept,
                                  std::size_t q, std::size_t k, Frac eps) {
  const std::size_t size = power(q, k);
  Frac best(0);
  bool first = true;
  for (std::size_t mask = 0; mask < (std::size_t{1} << size); ++mask) {
    Table t(size);
    for (std::size_t i = 0; i < size; ++i) t[i] = static_cast<int>((mask >> i) & 1U);
    Frac m = max_margin(n, g, kept, t, q, k, eps);
    if (first || m > best) best = m;
    first = false;
  }
  return best;
}

/// Positions l (0-indexed from the most significant digit) where bin_k(j) is 0.
inline std::set<std::size_t> zero_positions(std::size_t k, std::size_t j) {
  std::set<std::size_t> z;
  Values d = digits(2, k, j);
  for (std::size_t l = 0; l < k; ++l)
    if (d[l] == 0) z.insert(l);
  return z;
}

/// u_T[j] = 1 iff T intersect zeros(j) is neither empty nor all of [k].
inline std::vector<long long> u(std::size_t k, const std::set<std::size_t>& t) {
  std::vector<long long> out(power(2, k));
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::set<std::size_t> z = zero_positions(k, j), both;
    std::set_intersection(t.begin(), t.end(), z.begin(), z.end(), std::inserter(both, both.end()));
    out[j] = (!both.empty() && both.size() != k) ? 1 : 0;
  }
  return out;
}

/// 1/2 (-1)^{Ham(r xor m) + [r and m share no 1-bit]}
inline Frac lambda(std::size_t k, std::size_t r, std::size_t m) {
  Values br = digits(2, k, r), bm = digits(2, k, m);
  int ham = 0;
  bool common = false;
  for (std::size_t l = 0; l < k; ++l) {
    ham += br[l] != bm[l];
    common = common || (br[l] == 1 && bm[l] == 1);
  }
  const int exponent = ham + (common ? 0 : 1);
  return Frac(exponent % 2 == 0 ? 1 : -1, 2);
}

/// Sum over m of lambda_{r,m} u_{zeros(m)}.
inline std::vector<Frac> reconstruct(std::size_t k, std::size_t r) {
  std::vector<Frac> acc(power(2, k), Frac(0));
  for (std::size_t m = 0; m < acc.size(); ++m) {
    auto um = u(k, zero_positions(k, m));
    Frac c = lambda(k, r, m);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += c * um[j];
  }
  return acc;
}

/// Edges of the k-fold cover: (v_1, .., v_k) -> (v_1 + 0n, .., v_k + (k-1)n).
inline Edges cover_edges(std::size_t n, const Edges& g) {
  Edges out;
  for (const auto& e : g) {
    std::vector<unsigned> c(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) c[i] = static_cast<unsigned>(e[i] + i * n);
    out.push_back(c);
  }
  return out;
}

}  // namespace oracle
