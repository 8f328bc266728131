#include "support.hpp"

#include <gtest/gtest.h>

using namespace addsparse;
using namespace testing_support;

TEST(Sweep, ParseConfig) {
  const ExperimentConfig cfg = parse_experiment_config(
      "# grid\nn = 8..10\nk = [2, 3]\nq = 2\nm = 40\nepsilon = [1/2, 0.25]\nC = [1, 4]\n"
      "strategy = degree\nseeds = [3, 5]\ncertify = off\nverify = sample\ntrials = 50\n"
      "output = \"out.csv\"\n");
  EXPECT_EQ(cfg.n, (std::vector<std::size_t>{8, 9, 10}));
  EXPECT_EQ(cfg.k, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(cfg.epsilon, (std::vector<Rational>{Rational(1, 2), Rational(1, 4)}));
  EXPECT_EQ(cfg.constants, (std::vector<std::string>{"1", "4"}));
  EXPECT_EQ(cfg.strategy, Strategy::degree_weighted);
  EXPECT_EQ(cfg.certify, CertifyMode::off);
  EXPECT_EQ(cfg.verify, Enumeration::sampled);
  EXPECT_EQ(cfg.output, "out.csv");
  EXPECT_EQ(sweep_cells(cfg).size(), 3U * 2 * 1 * 1 * 2 * 2 * 2);
}

TEST(Sweep, ConfigErrors) {
  EXPECT_THROW(parse_experiment_config("n = 5\n"), ParseError);  // neither m nor density
  EXPECT_THROW(parse_experiment_config("m = 5\nepsilon = 1\n"), ParseError);
  EXPECT_THROW(parse_experiment_config("m = 5\nbogus = 1\n"), ParseError);
  EXPECT_THROW(parse_experiment_config("m = 5\nn 4\n"), ParseError);
  try {
    parse_experiment_config("m = 5\n\nepsilon = 3/2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Sweep, SingleCellIsSparsifyPlusVerify) {
  const ExperimentConfig cfg = parse_experiment_config("n = 9\nk = 3\nq = 2\nm = 120\nepsilon = 1/2\nC = 2\nseeds = 6\n");
  const auto rows = run_sweep(cfg);
  ASSERT_EQ(rows.size(), 1U);

  const Hypergraph g = generate(9, 3, 120, 6);
  SparsifyOptions opt;
  opt.constant = 2.0;
  const Sparsifier sp = sparsify(g, Rational(1, 2), 6, opt);
  const CertReport r = certify_all_predicates(g, sp, 2, BoundSpec{BoundMode::boolean, Rational(1, 2)});
  EXPECT_EQ(rows[0].kept, sp.kept_count());
  EXPECT_EQ(rows[0].attempts, sp.attempts);
  EXPECT_EQ(rows[0].min_feasible, to_string(r.min_feasible));
  EXPECT_EQ(rows[0].verdict, "pass");
  EXPECT_TRUE(rows[0].error.empty());
}

TEST(Sweep, HalvingEpsilonQuadruplesBudget) {
  const ExperimentConfig cfg = parse_experiment_config(
      "n = 64\nk = 2\nq = 2\nm = 4000\nepsilon = [1/8, 1/16]\nC = 1/16\ncertify = off\nverify = sample\ntrials = 20\n");
  const auto rows = run_sweep(cfg);
  ASSERT_EQ(rows.size(), 2U);
  const double ratio = static_cast<double>(rows[1].kept) / static_cast<double>(rows[0].kept);
  EXPECT_NEAR(ratio, 4.0 * std::log(16.0) / std::log(8.0), 0.01);
}

TEST(Sweep, ErrorsAreRecordedPerRow) {
  const ExperimentConfig cfg = parse_experiment_config("n = 4\nk = 2\nq = 2\nm = [5, 50]\nepsilon = 1/2\n");
  const auto rows = run_sweep(cfg);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].verdict, "pass");
  EXPECT_EQ(rows[1].verdict, "error");
  EXPECT_FALSE(rows[1].error.empty());
  const std::string csv = sweep_csv(cfg, rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,k,q,m,epsilon,C,strategy,seed,kept,attempts,min_feasible_epsilon,verdict,error");
}

TEST(Sweep, DenseTenVertexGridPasses) {
  const ExperimentConfig cfg = parse_experiment_config(
      "n = 10\nk = [2, 3]\nq = [2, 3]\ndensity = 1/3\nepsilon = 1/2\nC = [1, 4]\nseeds = 1..2\n");
  const auto rows = run_sweep(cfg);
  EXPECT_EQ(rows.size(), 16U);
  for (const auto& r : rows) {
    EXPECT_EQ(r.verdict, "pass") << r.error;
    EXPECT_NE(r.min_feasible, "inf");
  }
}

TEST(Sweep, CsvIsDeterministicAcrossWorkerCounts) {
  const std::string base = "n = 8\nk = [2, 3]\nq = 2\ndensity = 1/2\nepsilon = [1/2, 1/3]\nC = 1\nseeds = 1..3\n";
  const std::string one = sweep(parse_experiment_config(base));
  EXPECT_EQ(one, sweep(parse_experiment_config(base)));
  EXPECT_EQ(one, sweep(parse_experiment_config(base + "workers = 3\n")));
}
