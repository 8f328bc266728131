#pragma once

// Experiment sweeps over a grid of generated instances. The config is a flat
// `key = value` file; `#` starts a comment, lists are `[a, b, c]`, and integer
// ranges may be written `lo..hi`.
//
//   n = 8..10
//   k = [2, 3]
//   q = 2
//   m = 60            (or: density = 1/2, a fraction of the available edges)
//   epsilon = [1/2, 1/4]
//   C = [2, 4]
//   strategy = uniform
//   seeds = 1..3
//   certify = exhaustive
//   verify = exhaustive
//   trials = 10000
//   retries = 64
//   directed = true
//   workers = 1
//   output = sweep.csv
//
// Cells run in the order n, k, q, m, epsilon, C, seed (last varies fastest).

#include "addsparse/generate.hpp"
#include "addsparse/io.hpp"
#include "addsparse/rational.hpp"
#include "addsparse/sparsifier.hpp"
#include "addsparse/verifier.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace addsparse {

struct ExperimentConfig {
  std::vector<std::size_t> n{10};
  std::vector<std::size_t> k{2};
  std::vector<std::size_t> q{2};
  std::vector<std::size_t> m;         // explicit edge counts
  std::optional<Rational> density;    // used when m is empty
  std::vector<Rational> epsilon{Rational(1, 2)};
  std::vector<std::string> constants{"4"};  // kept verbatim for the CSV
  Strategy strategy = Strategy::uniform;
  std::vector<std::uint64_t> seeds{1};
  CertifyMode certify = CertifyMode::exhaustive;
  Enumeration verify = Enumeration::exhaustive;
  std::uint64_t trials = 10000;
  std::size_t retries = 64;
  bool directed = true;
  unsigned workers = 1;
  std::string output;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::string unquote(std::string s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
    return s.substr(1, s.size() - 2);
  return s;
}

inline std::vector<std::string> list_items(const std::string& value) {
  std::string body = value;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unterminated list '" + value + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> items;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = unquote(trim(item));
    if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw std::invalid_argument("empty value");
  return items;
}

inline std::uint64_t config_uint(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("expected a nonnegative integer, got '" + s + "'");
  return v;
}

template <class T>
std::vector<T> config_uints(const std::string& value) {
  std::vector<T> out;
  for (const std::string& item : list_items(value)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<T>(config_uint(item)));
      continue;
    }
    const std::uint64_t lo = config_uint(item.substr(0, dots));
    const std::uint64_t hi = config_uint(item.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(static_cast<T>(v));
  }
  return out;
}

inline bool config_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("expected true or false, got '" + s + "'");
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig cfg;
  std::size_t number = 0;
  std::stringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    const std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) detail::fail(number, "expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    try {
      if (key == "n") {
        cfg.n = detail::config_uints<std::size_t>(value);
      } else if (key == "k") {
        cfg.k = detail::config_uints<std::size_t>(value);
      } else if (key == "q") {
        cfg.q = detail::config_uints<std::size_t>(value);
      } else if (key == "m") {
        cfg.m = detail::config_uints<std::size_t>(value);
      } else if (key == "density") {
        cfg.density = parse_fraction(detail::unquote(value));
        if (*cfg.density <= 0 || *cfg.density > 1) throw std::invalid_argument("density must lie in (0,1]");
      } else if (key == "epsilon") {
        cfg.epsilon.clear();
        for (const auto& item : detail::list_items(value)) {
          Rational e = parse_fraction(item);
          check_epsilon(e);
          cfg.epsilon.push_back(e);
        }
      } else if (key == "C") {
        cfg.constants = detail::list_items(value);
        for (const auto& c : cfg.constants)
          if (!(parse_fraction(c) > 0)) throw std::invalid_argument("C must be positive");
      } else if (key == "strategy") {
        cfg.strategy = parse_strategy(detail::unquote(value));
      } else if (key == "seeds" || key == "seed") {
        cfg.seeds = detail::config_uints<std::uint64_t>(value);
      } else if (key == "certify") {
        cfg.certify = parse_certify_mode(detail::unquote(value));
      } else if (key == "verify") {
        const std::string v = detail::unquote(value);
        if (v == "exhaustive")
          cfg.verify = Enumeration::exhaustive;
        else if (v == "sample" || v == "sampled")
          cfg.verify = Enumeration::sampled;
        else
          throw std::invalid_argument("verify must be exhaustive or sample");
      } else if (key == "trials") {
        cfg.trials = detail::config_uint(value);
      } else if (key == "retries") {
        cfg.retries = detail::config_uint(value);
      } else if (key == "directed") {
        cfg.directed = detail::config_bool(detail::unquote(value));
      } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(std::max<std::uint64_t>(1, detail::config_uint(value)));
      } else if (key == "output") {
        cfg.output = detail::unquote(value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      detail::fail(number, e.what());
    }
  }
  if (cfg.m.empty() && !cfg.density) throw ParseError("config needs either m or density");
  for (std::size_t k : cfg.k)
    for (std::size_t q : cfg.q) {
      if (k == 0 || q < 2) throw ParseError("need k >= 1 and q >= 2");
      checked_pow(q, k);
    }
  return cfg;
}

struct SweepCell {
  std::size_t n, k, q, m;
  Rational epsilon;
  std::string constant;
  std::uint64_t seed;
};

struct SweepRow {
  SweepCell cell;
  std::size_t kept = 0;
  std::size_t attempts = 0;
  std::string min_feasible;
  std::string verdict;  // pass, fail or error
  std::string error;
};

inline std::vector<SweepCell> sweep_cells(const ExperimentConfig& cfg) {
  std::vector<SweepCell> cells;
  for (std::size_t n : cfg.n)
    for (std::size_t k : cfg.k)
      for (std::size_t q : cfg.q) {
        std::vector<std::size_t> ms = cfg.m;
        if (ms.empty()) {
          const std::uint64_t avail = available_edges(n, k, cfg.directed);
          const Rational d = *cfg.density;
          ms.push_back(static_cast<std::size_t>(
              std::max<std::uint64_t>(1, avail * static_cast<std::uint64_t>(d.numerator()) /
                                             static_cast<std::uint64_t>(d.denominator()))));
        }
        for (std::size_t m : ms)
          for (const Rational& e : cfg.epsilon)
            for (const std::string& c : cfg.constants)
              for (std::uint64_t s : cfg.seeds) cells.push_back(SweepCell{n, k, q, m, e, c, s});
      }
  return cells;
}

/// One `generate` + `sparsify` + `verify` composition.
inline SweepRow run_cell(const ExperimentConfig& cfg, const SweepCell& cell) {
  SweepRow row;
  row.cell = cell;
  try {
    const Hypergraph g = generate(cell.n, cell.k, cell.m, cell.seed, cfg.directed);
    SparsifyOptions opt;
    opt.strategy = cfg.strategy;
    opt.constant = to_double(parse_fraction(cell.constant));
    opt.certify = cfg.certify;
    opt.retries = cfg.retries;
    opt.trials = cfg.trials;
    opt.domains = {cell.q};
    const Sparsifier sp = sparsify(g, cell.epsilon, cell.seed, opt);
    row.kept = sp.kept_count();
    row.attempts = sp.attempts;

    CertifyOptions vo;
    vo.enumeration = cfg.verify;
    vo.trials = cfg.trials;
    vo.seed = cell.seed;
    const CertReport rep =
        certify_all_predicates(g, sp, cell.q, BoundSpec{natural_mode(cell.q), cell.epsilon}, vo);
    row.min_feasible = to_string(rep.min_feasible);
    row.verdict = rep.holds() ? "pass" : "fail";
  } catch (const std::exception& e) {
    row.verdict = "error";
    row.error = e.what();
  }
  return row;
}

inline std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  const std::vector<SweepCell> cells = sweep_cells(cfg);
  std::vector<SweepRow> rows(cells.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cells.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) rows[i] = run_cell(cfg, cells[i]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

inline std::string sweep_csv(const ExperimentConfig& cfg, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,k,q,m,epsilon,C,strategy,seed,kept,attempts,min_feasible_epsilon,verdict,error\n";
  for (const SweepRow& r : rows) {
    const SweepCell& c = r.cell;
    out << c.n << ',' << c.k << ',' << c.q << ',' << c.m << ',' << to_string(c.epsilon) << ','
        << csv_field(c.constant) << ',' << to_string(cfg.strategy) << ',' << c.seed << ',' << r.kept
        << ',' << r.attempts << ',' << r.min_feasible << ',' << r.verdict << ',' << csv_field(r.error)
        << '\n';
  }
  return out.str();
}

inline std::string sweep(const ExperimentConfig& cfg) { return sweep_csv(cfg, run_sweep(cfg)); }

}  // namespace addsparse
