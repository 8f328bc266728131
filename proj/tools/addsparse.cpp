// addsparse: command-line front end.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include "addsparse/addsparse.hpp"
#include "addsparse/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace addsparse;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

/// A predicate file, or a built-in name (cut, uncut, dicut, cover).
Predicate resolve_predicate(const std::string& what, std::size_t k, std::size_t q) {
  if (std::filesystem::exists(what)) return parse_predicate(read_file(what));
  return builtin_predicate(what, k, q);
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-")
    std::cout << contents;
  else
    write_file(path, contents);
}

/// Kept base indices of a sparsifier file: its `# kept` line, or else its
/// edges looked up in the base hypergraph.
std::vector<std::size_t> kept_indices(const Hypergraph& g, const HypergraphFile& sfile) {
  if (sfile.kept) return *sfile.kept;
  std::map<std::vector<Vertex>, std::size_t> where;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    where.emplace(std::vector<Vertex>(e.begin(), e.end()), i);
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sfile.graph.edge_count(); ++i) {
    auto e = sfile.graph.edge(i);
    auto it = where.find(std::vector<Vertex>(e.begin(), e.end()));
    if (it == where.end())
      throw std::invalid_argument("sparsifier edge " + std::to_string(i) + " is not an edge of the graph");
    kept.push_back(it->second);
  }
  return kept;
}

std::vector<std::size_t> parse_domains(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t q = std::stoul(item);
    if (q < 2) throw std::invalid_argument("domain sizes must be at least 2");
    out.push_back(q);
  }
  if (out.empty()) throw std::invalid_argument("empty domain list");
  return out;
}

struct SparsifyArgs {
  std::string input, output, report, epsilon = "1/4", strategy = "uniform", certify = "exhaustive",
                                     domains = "2";
  std::string constant = "4";
  std::uint64_t seed = 42, trials = 10000;
  std::size_t retries = 64;
  unsigned workers = 1;
};

int run_sparsify(const SparsifyArgs& a) {
  const HypergraphFile in = parse_hypergraph(read_file(a.input));
  const Rational eps = parse_fraction(a.epsilon);
  SparsifyOptions opt;
  opt.strategy = parse_strategy(a.strategy);
  opt.constant = to_double(parse_fraction(a.constant));
  opt.certify = parse_certify_mode(a.certify);
  opt.retries = a.retries;
  opt.trials = a.trials;
  opt.workers = a.workers;
  opt.domains = parse_domains(a.domains);

  Sparsifier sp;
  try {
    sp = in.labels.empty() ? sparsify(in.graph, eps, a.seed, opt)
                           : sparsify_labeled(in.graph, in.labels, eps, a.seed, opt).combined;
  } catch (const CertificationError& e) {
    std::cerr << "sparsify: " << e.what() << '\n';
    return kFail;
  }
  const Hypergraph sub = in.graph.subgraph(sp.kept);
  std::vector<std::string> labels;
  for (std::size_t i : sp.kept)
    if (!in.labels.empty()) labels.push_back(in.labels[i]);
  emit(a.output, serialize_hypergraph(sub, labels, sp.kept));
  nlohmann::json rep = sparsify_report(sp, a.seed, opt.strategy, opt.constant);
  if (!a.report.empty()) write_file(a.report, rep.dump(2) + "\n");
  std::cerr << "kept " << sp.kept_count() << " of " << sp.base_edge_count << " edges, scale "
            << to_string(sp.scale) << ", attempts " << sp.attempts << '\n';
  return kPass;
}

struct VerifyArgs {
  std::string graph, sparsifier, predicate = "all", epsilon = "1/4", mode = "boolean",
                                 certify = "exhaustive", json;
  std::size_t q = 0;
  std::uint64_t trials = 10000, seed = 7;
  unsigned workers = 1;
};

int run_verify(const VerifyArgs& a) {
  const HypergraphFile g = parse_hypergraph(read_file(a.graph));
  const HypergraphFile s = parse_hypergraph(read_file(a.sparsifier));
  const Sparsifier sp =
      make_sparsifier(g.graph.edge_count(), kept_indices(g.graph, s), parse_fraction(a.epsilon));
  BoundSpec bound;
  if (a.mode == "boolean")
    bound.mode = BoundMode::boolean;
  else if (a.mode == "all-but-one" || a.mode == "all_but_one")
    bound.mode = BoundMode::all_but_one;
  else
    throw std::invalid_argument("mode must be boolean or all-but-one");
  bound.epsilon = sp.epsilon;
  CertifyOptions opt;
  if (a.certify == "exhaustive")
    opt.enumeration = Enumeration::exhaustive;
  else if (a.certify == "sample" || a.certify == "sampled")
    opt.enumeration = Enumeration::sampled;
  else
    throw std::invalid_argument("certify must be exhaustive or sample");
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.workers = a.workers;

  std::size_t q = a.q ? a.q : (bound.mode == BoundMode::boolean ? 2 : 3);
  CertReport rep;
  if (a.predicate == "all") {
    rep = certify_all_predicates(g.graph, sp, q, bound, opt);
  } else {
    const Predicate p = resolve_predicate(a.predicate, g.graph.arity(), q);
    rep = certify(g.graph, sp, p, bound, opt);
  }
  nlohmann::json j = verify_report(rep, a.predicate);
  const std::string text = j.dump(2) + "\n";
  if (a.json.empty())
    std::cout << text;
  else
    write_file(a.json, text);
  return rep.holds() ? kPass : kFail;
}

int run_cover(const std::string& input, const std::string& output, const std::string& map) {
  const HypergraphFile in = parse_hypergraph(read_file(input));
  const Cover c = in.graph.directed() ? cover(in.graph) : undirected_cover(in.graph);
  emit(output, serialize_hypergraph(c.lifted));
  if (!map.empty()) {
    std::string tsv;
    for (std::size_t i = 0; i < c.base_edge.size(); ++i)
      tsv += std::to_string(i) + "\t" + std::to_string(c.base_edge[i]) + "\n";
    write_file(map, tsv);
  }
  return kPass;
}

int run_coeffs(std::size_t k, bool check) {
  const std::size_t size = checked_pow(2, k, std::size_t{1} << 12);
  if (!check) {
    for (std::size_t r = 0; r < size; ++r) {
      std::cout << r;
      for (std::size_t m = 0; m < size; ++m) std::cout << ' ' << to_string(lambda_coeff(k, r, m).value());
      std::cout << '\n';
    }
    return kPass;
  }
  std::size_t bad = 0;
  for (std::size_t r = 0; r + 1 < size; ++r) {
    const IntVector v = reconstruct_basis(k, r);
    bool unit = true;
    for (std::size_t i = 0; i < size; ++i) unit = unit && v[i] == (i == r ? 1 : 0);
    const bool zero_sum = lambda_sum(k, r) == Rational(0);
    if (!unit || !zero_sum) {
      ++bad;
      std::cout << "r=" << r << (unit ? "" : " not a unit vector") << (zero_sum ? "" : " nonzero sum")
                << '\n';
    }
  }
  std::cout << "k=" << k << ": " << (size - 1 - bad) << "/" << (size - 1)
            << " indices reconstruct exactly\n";
  return bad == 0 ? kPass : kFail;
}

int run_gen(std::size_t n, std::size_t k, std::size_t q, std::size_t m, std::uint64_t seed,
            bool undirected, const std::string& output) {
  checked_pow(q, k);
  emit(output, serialize_hypergraph(generate(n, k, m, seed, !undirected)));
  return kPass;
}

int run_sweep_cmd(const std::string& config, const std::string& output) {
  ExperimentConfig cfg = parse_experiment_config(read_file(config));
  const std::string csv = sweep(cfg);
  emit(output.empty() ? cfg.output : output, csv);
  return kPass;
}

int run_optimality(std::size_t n, std::size_t q, std::uint64_t samples, std::uint64_t seed,
                   const std::string& json) {
  const OptimalityRecord rec = optimality_counterexample(n, q, samples, seed);
  nlohmann::json j;
  j["n"] = rec.n;
  j["q"] = rec.q;
  j["exhaustive"] = rec.exhaustive;
  j["examined"] = rec.examined;
  j["violated"] = rec.violated;
  j["regular_cases"] = rec.regular_cases;
  j["irregular_cases"] = rec.irregular_cases;
  j["min_margin"] = to_string(rec.min_margin);
  if (rec.weakest) {
    j["weakest_kept"] = rec.weakest->kept;
    j["weakest_witness"] = assignment_json(rec.weakest->assignment);
  }
  j["verdict"] = rec.all_violated() ? "every subgraph refuted" : "some subgraph not refuted";
  emit(json, j.dump(2) + "\n");
  return rec.all_violated() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"additive sparsification of CSP instances"};
  app.require_subcommand(1);

  SparsifyArgs sa;
  auto* sp = app.add_subcommand("sparsify", "sample and certify a sparsifier");
  sp->add_option("--input", sa.input, "hypergraph file")->required();
  sp->add_option("--epsilon", sa.epsilon, "eps in (0,1), e.g. 1/4");
  sp->add_option("--seed", sa.seed);
  sp->add_option("--constant", sa.constant, "size constant C, e.g. 4 or 1/2");
  sp->add_option("--strategy", sa.strategy, "uniform|degree");
  sp->add_option("--certify", sa.certify, "exhaustive|sample|off");
  sp->add_option("--domains", sa.domains, "comma-separated domain sizes to certify, e.g. 2,3");
  sp->add_option("--retries", sa.retries);
  sp->add_option("--trials", sa.trials, "assignments per sampled certification");
  sp->add_option("--workers", sa.workers);
  sp->add_option("--output", sa.output, "sparsifier file (default stdout)");
  sp->add_option("--report", sa.report, "JSON report");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "check the additive bound");
  ve->add_option("--graph", va.graph)->required();
  ve->add_option("--sparsifier", va.sparsifier)->required();
  ve->add_option("--predicate", va.predicate, "predicate file, built-in name, or 'all'");
  ve->add_option("--epsilon", va.epsilon);
  ve->add_option("--mode", va.mode, "boolean|all-but-one");
  ve->add_option("--q", va.q, "domain size for built-ins and 'all'");
  ve->add_option("--certify", va.certify, "exhaustive|sample");
  ve->add_option("--trials", va.trials);
  ve->add_option("--seed", va.seed);
  ve->add_option("--workers", va.workers);
  ve->add_option("--json", va.json);

  std::string cin, cout_, cmap;
  auto* co = app.add_subcommand("cover", "k-partite k-fold cover");
  co->add_option("--input", cin)->required();
  co->add_option("--output", cout_);
  co->add_option("--map", cmap, "TSV of cover edge to base edge");

  std::size_t ck = 2;
  bool ccheck = false;
  auto* cf = app.add_subcommand("coeffs", "lambda coefficients");
  cf->add_option("--k", ck)->required();
  cf->add_flag("--check", ccheck, "reconstruct every basis vector");

  std::size_t gn = 10, gk = 2, gq = 2, gm = 0;
  std::uint64_t gseed = 1;
  bool gund = false;
  std::string gout;
  auto* ge = app.add_subcommand("gen", "random instance");
  ge->add_option("--n", gn);
  ge->add_option("--k", gk);
  ge->add_option("--q", gq);
  ge->add_option("--m", gm)->required();
  ge->add_option("--seed", gseed);
  ge->add_flag("--undirected", gund);
  ge->add_option("--output", gout);

  std::string swcfg, swout;
  auto* sw = app.add_subcommand("sweep", "experiment grid to CSV");
  sw->add_option("--config", swcfg)->required();
  sw->add_option("--output", swout);

  std::size_t on = 5, oq = 3;
  std::uint64_t osamples = 10000, oseed = 1;
  std::string ojson;
  auto* op = app.add_subcommand("optimality-demo", "clique counterexample");
  op->add_option("--n", on);
  op->add_option("--q", oq);
  op->add_option("--samples", osamples, "subgraphs examined when n > 5");
  op->add_option("--seed", oseed);
  op->add_option("--json", ojson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*sp) return run_sparsify(sa);
    if (*ve) return run_verify(va);
    if (*co) return run_cover(cin, cout_, cmap);
    if (*cf) return run_coeffs(ck, ccheck);
    if (*ge) return run_gen(gn, gk, gq, gm, gseed, gund, gout);
    if (*sw) return run_sweep_cmd(swcfg, swout);
    if (*op) return run_optimality(on, oq, osamples, oseed, ojson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
