#include "addsparse/addsparse.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

using namespace addsparse;
namespace fs = std::filesystem;

namespace {

const std::string kCli = ADDSPARSE_CLI;
const std::string kSamples = SAMPLES_DIR;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("addsparse_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = kCli + " " + args + " >" + path("stdout.txt") + " 2>" + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SparsifyThenVerify) {
  ASSERT_EQ(run("gen --n 10 --k 3 --m 250 --seed 3 --output " + path("g.hg")), 0);
  ASSERT_EQ(run("sparsify --input " + path("g.hg") + " --epsilon 1/2 --seed 42 --constant 4 --strategy uniform"
                " --certify exhaustive --domains 2,3 --output " + path("ge.hg") + " --report " + path("rep.json")),
            0);
  const auto rep = nlohmann::json::parse(read_file(path("rep.json")));
  EXPECT_EQ(rep["base_edges"], 250);
  EXPECT_EQ(rep["kept_edges"], 160);
  EXPECT_EQ(rep["scale"], "25/16");
  EXPECT_TRUE(rep["certified"].get<bool>());
  EXPECT_EQ(rep["kept"].size(), 160U);

  const HypergraphFile ge = parse_hypergraph(read_file(path("ge.hg")));
  EXPECT_EQ(*ge.kept, rep["kept"].get<std::vector<std::size_t>>());

  EXPECT_EQ(run("verify --graph " + path("g.hg") + " --sparsifier " + path("ge.hg") +
                " --predicate cut --epsilon 1/2 --mode boolean --json " + path("v.json")),
            0);
  const auto v = nlohmann::json::parse(read_file(path("v.json")));
  EXPECT_EQ(v["verdict"], "pass");
  EXPECT_EQ(v["checked"], 1024);
  EXPECT_TRUE(v.contains("max_margin") && v.contains("witness") && v.contains("min_feasible_epsilon"));

  EXPECT_EQ(run("verify --graph " + path("g.hg") + " --sparsifier " + path("ge.hg") +
                " --predicate all --q 3 --epsilon 1/2 --mode all-but-one --json " + path("v3.json")),
            0);
  // far below the feasible eps the same kept set fails
  EXPECT_EQ(run("verify --graph " + path("g.hg") + " --sparsifier " + path("ge.hg") +
                " --predicate cut --epsilon 1/1000 --mode boolean --json " + path("bad.json")),
            1);
  EXPECT_EQ(nlohmann::json::parse(read_file(path("bad.json")))["verdict"], "fail");
}

TEST_F(Cli, VerifyWithPredicateFileAndSampling) {
  const std::string g = kSamples + "/reference.hg";
  ASSERT_EQ(run("sparsify --input " + g + " --epsilon 1/2 --output " + path("s.hg")), 0);
  EXPECT_EQ(run("verify --graph " + g + " --sparsifier " + path("s.hg") + " --predicate " + kSamples +
                "/dicut.pred --epsilon 1/2 --certify sample --trials 100 --seed 3 --json " + path("v.json")),
            0);
  const auto v = nlohmann::json::parse(read_file(path("v.json")));
  EXPECT_EQ(v["enumeration"], "sampled");
  EXPECT_EQ(v["checked"], 100);
}

TEST_F(Cli, LabeledInput) {
  EXPECT_EQ(run("sparsify --input " + kSamples + "/mixed.hg --epsilon 1/2 --constant 0.1 --output " +
                path("m.hg") + " --report " + path("m.json")),
            0);
  const HypergraphFile f = parse_hypergraph(read_file(path("m.hg")));
  EXPECT_EQ(f.labels.size(), f.graph.edge_count());
}

TEST_F(Cli, Cover) {
  ASSERT_EQ(run("cover --input " + kSamples + "/reference.hg --output " + path("c.hg") + " --map " +
                path("map.tsv")),
            0);
  const HypergraphFile c = parse_hypergraph(read_file(path("c.hg")));
  EXPECT_EQ(c.graph.vertex_count(), 14U);
  EXPECT_EQ(c.graph.edge_count(), 11U);
  const std::string map = read_file(path("map.tsv"));
  EXPECT_EQ(map.substr(0, 8), "0\t0\n1\t1\n");
  EXPECT_EQ(std::count(map.begin(), map.end(), '\n'), 11);
}

TEST_F(Cli, Coeffs) {
  EXPECT_EQ(run("coeffs --k 4 --check"), 0);
  EXPECT_NE(read_file(path("stdout.txt")).find("15/15"), std::string::npos);
  EXPECT_EQ(run("coeffs --k 2"), 0);
  EXPECT_EQ(read_file(path("stdout.txt")).substr(0, 20), "0 -1/2 1/2 1/2 -1/2\n");
  EXPECT_EQ(run("coeffs --k 3 --check"), 2);
}

TEST_F(Cli, SweepIsByteStable) {
  ASSERT_EQ(run("sweep --config " + kSamples + "/sweep.cfg --output " + path("a.csv")), 0);
  ASSERT_EQ(run("sweep --config " + kSamples + "/sweep.cfg --output " + path("b.csv")), 0);
  const std::string a = read_file(path("a.csv"));
  EXPECT_EQ(a, read_file(path("b.csv")));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 1 + 2 * 2 * 2 * 2);
  EXPECT_EQ(a.find(",fail,"), std::string::npos);
  EXPECT_EQ(a.find(",error,"), std::string::npos);
}

TEST_F(Cli, OptimalityDemo) {
  ASSERT_EQ(run("optimality-demo --n 5 --q 3 --json " + path("o.json")), 0);
  const auto o = nlohmann::json::parse(read_file(path("o.json")));
  EXPECT_EQ(o["examined"], 1022);
  EXPECT_EQ(o["violated"], 1022);
}

TEST_F(Cli, InputErrors) {
  write_file(path("bad.hg"), "HYPERGRAPH v1\nn 3 k 2 directed\ne 0 1\ne 2\n");
  EXPECT_EQ(run("sparsify --input " + path("bad.hg")), 2);
  EXPECT_NE(read_file(path("stderr.txt")).find("line 4"), std::string::npos);
  EXPECT_EQ(run("sparsify --input " + path("missing.hg")), 2);
  EXPECT_EQ(run("sparsify --input " + kSamples + "/reference.hg --epsilon 2"), 2);
  EXPECT_EQ(run("sparsify --input " + kSamples + "/reference.hg --strategy magic"), 2);
  EXPECT_EQ(run("sparsify --input " + kSamples + "/reference.hg --constant x"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("gen --n 4 --k 2 --m 13"), 2);
}
