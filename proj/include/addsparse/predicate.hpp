#pragma once

#include "addsparse/encoding.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace addsparse {

/// A k-ary predicate on the domain [q], stored as its dense truth table.
/// `table[i]` is the value at the tuple rep_{q,k}(i); read as a 0/1 vector
/// this is v_P.
class Predicate {
 public:
  Predicate(std::size_t k, std::size_t q, std::vector<std::uint8_t> table,
            std::size_t cap = kMaxTableSize)
      : k_(k), q_(q), table_(std::move(table)) {
    if (k == 0) throw std::invalid_argument("predicate arity must be at least 1");
    if (q < 2) throw std::invalid_argument("predicate domain size must be at least 2");
    std::size_t size = checked_pow(q, k, cap);
    if (table_.size() != size)
      throw std::invalid_argument("truth table has length " + std::to_string(table_.size()) +
                                  ", expected q^k = " + std::to_string(size));
    for (auto bit : table_)
      if (bit > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
    symmetric_ = compute_symmetric();
  }

  static Predicate constant(std::size_t k, std::size_t q, bool value) {
    return Predicate(k, q, std::vector<std::uint8_t>(checked_pow(q, k), value ? 1 : 0));
  }

  template <class Fn>
  static Predicate from_function(std::size_t k, std::size_t q, Fn&& fn) {
    std::size_t size = checked_pow(q, k);
    std::vector<std::uint8_t> table(size);
    for (std::size_t i = 0; i < size; ++i) table[i] = fn(rep(q, k, i)) ? 1 : 0;
    return Predicate(k, q, std::move(table));
  }

  std::size_t arity() const { return k_; }
  std::size_t domain() const { return q_; }
  std::size_t size() const { return table_.size(); }
  const std::vector<std::uint8_t>& table() const { return table_; }

  bool operator[](std::size_t i) const { return table_[i] != 0; }
  bool operator()(std::span<const Digit> tuple) const { return table_[index(q_, tuple)] != 0; }

  /// Order invariance (P(b) = P(b o sigma) for every permutation sigma).
  bool symmetric() const { return symmetric_; }

  std::size_t true_count() const {
    return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), 1));
  }

  std::string table_string() const {
    std::string s(table_.size(), '0');
    for (std::size_t i = 0; i < table_.size(); ++i) s[i] = table_[i] ? '1' : '0';
    return s;
  }

  friend bool operator==(const Predicate& a, const Predicate& b) {
    return a.k_ == b.k_ && a.q_ == b.q_ && a.table_ == b.table_;
  }

 private:
  // Adjacent transpositions generate S_k.
  bool compute_symmetric() const {
    std::vector<std::size_t> weight(k_);
    std::size_t w = 1;
    for (std::size_t pos = k_; pos-- > 0;) {
      weight[pos] = w;
      w *= q_;
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
      for (std::size_t pos = 0; pos + 1 < k_; ++pos) {
        std::size_t a = (i / weight[pos]) % q_;
        std::size_t b = (i / weight[pos + 1]) % q_;
        if (a == b) continue;
        std::size_t swapped = i - a * weight[pos] - b * weight[pos + 1] + b * weight[pos] +
                              a * weight[pos + 1];
        if (table_[i] != table_[swapped]) return false;
      }
    }
    return true;
  }

  std::size_t k_;
  std::size_t q_;
  std::vector<std::uint8_t> table_;
  bool symmetric_ = false;
};

/// 1 iff the tuple is not constant. For q = 2 this is the hypergraph Cut.
inline Predicate cut_predicate(std::size_t k, std::size_t q = 2) {
  return Predicate::from_function(k, q, [](const std::vector<Digit>& t) {
    return !std::all_of(t.begin(), t.end(), [&](Digit d) { return d == t.front(); });
  });
}

inline Predicate complement(const Predicate& p) {
  std::vector<std::uint8_t> table = p.table();
  for (auto& bit : table) bit ^= 1U;
  return Predicate(p.arity(), p.domain(), std::move(table));
}

/// The singleton predicate with v_P = e_r.
inline Predicate singleton_predicate(std::size_t k, std::size_t q, std::size_t r) {
  std::vector<std::uint8_t> table(checked_pow(q, k), 0);
  if (r >= table.size()) throw std::out_of_range("singleton index out of range");
  table[r] = 1;
  return Predicate(k, q, std::move(table));
}

/// Named built-ins: cut, uncut (any k >= 2, q >= 2); dicut, cover (k = 2, q = 2).
inline Predicate builtin_predicate(std::string_view name, std::size_t k, std::size_t q) {
  if (name == "cut" || name == "uncut") {
    if (k < 2) throw std::invalid_argument("cut needs arity at least 2");
    Predicate cut = cut_predicate(k, q);
    return name == "cut" ? cut : complement(cut);
  }
  if (name == "dicut" || name == "cover") {
    if (k != 2 || q != 2)
      throw std::invalid_argument(std::string(name) + " is defined for k = 2, q = 2 only");
    if (name == "dicut")
      return Predicate(2, 2, {0, 1, 0, 0});
    return Predicate(2, 2, {0, 1, 1, 1});
  }
  throw std::invalid_argument("unknown predicate '" + std::string(name) + "'");
}

}  // namespace addsparse
