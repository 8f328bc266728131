#pragma once

// Flat text formats.
//
//   HYPERGRAPH v1
//   n <n> k <k> <directed|undirected>
//   e i1 ... ik [@label]        one line per edge, 0-indexed
//
//   PREDICATE v1
//   k <k> q <q>
//   table <q^k characters 0/1 in index order>
//
//   ASSIGN v1
//   q <q>
//   <n space-separated values>
//
// Lines starting with '#' are comments; `# kept i j ...` records the base edge
// indices of a sparsifier file.

#include "addsparse/hypergraph.hpp"
#include "addsparse/predicate.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace addsparse {

/// Malformed input; the message names the offending line where there is one.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HypergraphFile {
  Hypergraph graph;
  std::vector<std::string> labels;                // per edge, empty when unlabeled
  std::optional<std::vector<std::size_t>> kept;   // from a `# kept` comment
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// Non-blank lines, with comments handed to `on_comment`.
template <class OnComment>
std::vector<Line> read_lines(std::string_view text, OnComment&& on_comment) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    auto tokens = split(raw);
    if (!tokens.empty()) {
      if (tokens[0][0] == '#')
        on_comment(number, tokens);
      else
        lines.push_back(Line{number, std::move(tokens)});
    }
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(line, "expected a nonnegative integer for " + std::string(what) + ", got '" +
                   std::string(tok) + "'");
  return value;
}

inline void expect_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) throw ParseError("empty input, expected '" + std::string(magic) + " v1'");
  const Line& h = lines[0];
  if (h.tokens.size() != 2 || h.tokens[0] != magic || h.tokens[1] != "v1")
    fail(h.number, "expected header '" + std::string(magic) + " v1'");
}

}  // namespace detail

inline HypergraphFile parse_hypergraph(std::string_view text) {
  std::optional<std::vector<std::size_t>> kept;
  auto lines = detail::read_lines(text, [&](std::size_t number, const std::vector<std::string>& t) {
    if (t.size() >= 2 && t[0] == "#" && t[1] == "kept") {
      std::vector<std::size_t> idx;
      for (std::size_t i = 2; i < t.size(); ++i)
        idx.push_back(detail::parse_uint(t[i], number, "kept edge index"));
      kept = std::move(idx);
    }
  });
  detail::expect_header(lines, "HYPERGRAPH");
  if (lines.size() < 2) throw ParseError("missing 'n <n> k <k> <directed|undirected>' line");
  const detail::Line& dims = lines[1];
  if (dims.tokens.size() != 5 || dims.tokens[0] != "n" || dims.tokens[2] != "k")
    detail::fail(dims.number, "expected 'n <n> k <k> <directed|undirected>'");
  const std::size_t n = detail::parse_uint(dims.tokens[1], dims.number, "n");
  const std::size_t k = detail::parse_uint(dims.tokens[3], dims.number, "k");
  if (k == 0) detail::fail(dims.number, "arity must be at least 1");
  bool directed;
  if (dims.tokens[4] == "directed")
    directed = true;
  else if (dims.tokens[4] == "undirected")
    directed = false;
  else
    detail::fail(dims.number, "orientation must be 'directed' or 'undirected'");

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::map<Edge, std::size_t> seen;
  bool any_label = false, any_unlabeled = false;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const detail::Line& line = lines[li];
    const auto& t = line.tokens;
    if (t[0] != "e") detail::fail(line.number, "expected an edge line 'e i1 ... ik'");
    std::size_t entries = t.size() - 1;
    std::string label;
    if (entries > 0 && t.back()[0] == '@') {
      label = t.back().substr(1);
      if (label.empty()) detail::fail(line.number, "empty predicate label");
      --entries;
    }
    if (entries != k)
      detail::fail(line.number, "edge has " + std::to_string(entries) + " entries, expected k = " +
                                    std::to_string(k));
    Edge e(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t v = detail::parse_uint(t[i + 1], line.number, "vertex");
      if (v >= n)
        detail::fail(line.number, "vertex " + std::to_string(v) + " outside [0, " +
                                      std::to_string(n) + ")");
      e[i] = static_cast<Vertex>(v);
    }
    Edge key = e;
    if (!directed) std::sort(key.begin(), key.end());
    auto [it, inserted] = seen.emplace(key, line.number);
    if (!inserted) {
      if (directed)
        detail::fail(line.number,
                     "duplicate directed edge (first seen on line " + std::to_string(it->second) + ")");
      continue;
    }
    (label.empty() ? any_unlabeled : any_label) = true;
    edges.push_back(std::move(e));
    labels.push_back(std::move(label));
  }
  if (any_label && any_unlabeled)
    throw ParseError("either every edge carries an @label or none does");
  HypergraphFile out;
  out.graph = Hypergraph(n, k, directed ? Orientation::directed : Orientation::undirected, edges);
  if (any_label) out.labels = std::move(labels);
  out.kept = std::move(kept);
  return out;
}

inline std::string serialize_hypergraph(const Hypergraph& g,
                                        const std::vector<std::string>& labels = {},
                                        const std::optional<std::vector<std::size_t>>& kept = {}) {
  if (!labels.empty() && labels.size() != g.edge_count())
    throw std::invalid_argument("need one label per edge");
  std::ostringstream out;
  out << "HYPERGRAPH v1\n";
  out << "n " << g.vertex_count() << " k " << g.arity() << ' '
      << (g.directed() ? "directed" : "undirected") << '\n';
  if (kept) {
    out << "# kept";
    for (std::size_t i : *kept) out << ' ' << i;
    out << '\n';
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out << 'e';
    for (Vertex v : g.edge(i)) out << ' ' << v;
    if (!labels.empty()) out << " @" << labels[i];
    out << '\n';
  }
  return out.str();
}

inline Predicate parse_predicate(std::string_view text) {
  auto lines = detail::read_lines(text, [](std::size_t, const std::vector<std::string>&) {});
  detail::expect_header(lines, "PREDICATE");
  if (lines.size() != 3) throw ParseError("predicate file needs 'k <k> q <q>' and 'table <bits>'");
  const auto& dims = lines[1];
  if (dims.tokens.size() != 4 || dims.tokens[0] != "k" || dims.tokens[2] != "q")
    detail::fail(dims.number, "expected 'k <k> q <q>'");
  const std::size_t k = detail::parse_uint(dims.tokens[1], dims.number, "k");
  const std::size_t q = detail::parse_uint(dims.tokens[3], dims.number, "q");
  const auto& tab = lines[2];
  if (tab.tokens.size() != 2 || tab.tokens[0] != "table")
    detail::fail(tab.number, "expected 'table <bits>'");
  const std::string& bits = tab.tokens[1];
  std::vector<std::uint8_t> table;
  table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') detail::fail(tab.number, std::string("non-binary table character '") + c + "'");
    table.push_back(c == '1' ? 1 : 0);
  }
  try {
    return Predicate(k, q, std::move(table));
  } catch (const std::exception& e) {
    detail::fail(tab.number, e.what());
  }
}

inline std::string serialize_predicate(const Predicate& p) {
  return "PREDICATE v1\nk " + std::to_string(p.arity()) + " q " + std::to_string(p.domain()) +
         "\ntable " + p.table_string() + "\n";
}

inline Assignment parse_assignment(std::string_view text) {
  auto lines = detail::read_lines(text, [](std::size_t, const std::vector<std::string>&) {});
  detail::expect_header(lines, "ASSIGN");
  if (lines.size() < 2) throw ParseError("assignment file needs a 'q <q>' line");
  const auto& dom = lines[1];
  if (dom.tokens.size() != 2 || dom.tokens[0] != "q") detail::fail(dom.number, "expected 'q <q>'");
  const std::size_t q = detail::parse_uint(dom.tokens[1], dom.number, "q");
  if (q < 2) detail::fail(dom.number, "q must be at least 2");
  if (lines.size() > 3) detail::fail(lines[3].number, "values must be on a single line");
  std::vector<Digit> values;
  if (lines.size() == 3) {
    for (const auto& tok : lines[2].tokens) {
      std::uint64_t v = detail::parse_uint(tok, lines[2].number, "value");
      if (v >= q)
        detail::fail(lines[2].number, "value " + std::to_string(v) + " is not below q = " + std::to_string(q));
      values.push_back(static_cast<Digit>(v));
    }
  }
  return Assignment(q, std::move(values));
}

inline std::string serialize_assignment(const Assignment& a) {
  std::string out = "ASSIGN v1\nq " + std::to_string(a.domain()) + "\n";
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(a[v]);
  }
  return out + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace addsparse
