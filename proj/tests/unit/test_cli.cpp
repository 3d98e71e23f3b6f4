#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "hyperlab/cli/cli.hpp"
#include "hyperlab/hypercore.hpp"
#include "oracles.hpp"

using namespace hyperlab;
namespace ht = hyperlab::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hyperlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Hypergraph& g) {
    const auto path = (dir_ / name).string();
    write_shg(path, g);
    return path;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, Density) {
  const auto r = run({"density", write("e.shg", ht::single_edge())});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["num"], 1);
  EXPECT_EQ(j["den"], 3);
}

TEST_F(CliTest, DistanceAndCopies) {
  const auto tri = write("t.shg", ht::loose_triangle());
  auto r = run({"distance", tri, "--x", "2", "--y", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["distance"], 2);
  r = run({"copies", "--motif", write("e.shg", ht::single_edge()), "--host", tri});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["copies"], 3);
}

TEST_F(CliTest, EvalAndDepth) {
  const auto g = write("e.shg", ht::single_edge());
  auto r = run({"eval", "--formula", "exists y exists z N(x,y,z)", "--graph", g, "--assign", "x=2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], true);
  r = run({"depth", "exists x forall y x = y"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["depth"], 2);
}

TEST_F(CliTest, GameReportsFormula) {
  const auto r = run({"game", "--left", write("a.shg", ht::single_edge()), "--right",
                      write("b.shg", ht::edgeless(3, 3)), "--rounds", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["winner"], "spoiler");
  EXPECT_TRUE(j.contains("formula"));
}

TEST_F(CliTest, SampleIsReproducible) {
  const std::vector<std::string> args{"sample", "--n", "12", "--p", "0.2", "--seed", "4"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run(args).out);
}

TEST_F(CliTest, BoundsCandidates) {
  const auto r = run({"bounds", "--s", "3", "--k", "5", "--max-candidates", "--consistency"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["max_candidates"][0]["num"], 25);
  EXPECT_EQ(j["max_candidates"][0]["den"], 13);
  EXPECT_EQ(j["consistency"]["ok"], true);
}

TEST_F(CliTest, Constructions) {
  auto r = run({"construct", "limit-point", "--s", "3", "--l", "1", "--m", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["alpha"]["den"], 4);
  r = run({"construct", "witness", "--s", "3", "--k", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["alpha"]["num"], 9);
}

TEST_F(CliTest, ErrorsMapToExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"density"}).code, cli::kExitUsage);
  auto r = run({"depth", "exists ("});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_EQ(nlohmann::json::parse(r.err)["error"]["kind"], "parse");
  r = run({"--enumeration-cap", "3", "density", write("t.shg", ht::loose_triangle())});
  EXPECT_EQ(r.code, cli::kExitCapacity);
  EXPECT_EQ(run({"construct", "limit-point", "--s", "3", "--l", "1", "--m", "1"}).code, cli::kExitFailure);
}
