#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace fockmodes::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FOCKMODES_TEST_DATA) + "/" + name; }

TEST(Cli, EntropyJson) {
  const auto r = run({"entropy", "|20> + |02>", "--partition", "0|1", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"input", "partition", "lambdas", "entropy_bits", "rank", "rank_bound", "wall_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_NEAR(j["entropy_bits"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["rank_bound"], 3);
}

TEST(Cli, EntropyMatchesLibrary) {
  const std::string text = "0.3|0220> + |2002> - 0.5i|1111> + |0000>";
  const auto r = run({"entropy", text, "--partition", "0,3|1,2", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto spec = schmidt_spectrum(parse_state(text), Partition({0, 3}, {1, 2}));
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entropy_bits"].get<double>(), spec.entropy_bits);
  EXPECT_EQ(j["lambdas"].get<std::vector<double>>(), spec.lambdas);
}

TEST(Cli, TransformCircular) {
  const auto r = run({"transform", "|20> + |02>", "--unitary", data("circular.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "|11>\n");
}

TEST(Cli, TransformPrecision) {
  const auto r = run({"transform", "|01>", "--unitary", data("balanced.json"), "--precision", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "0.707*|10> - 0.707*|01>\n");
}

TEST(Cli, OptimizeVacuumPlusPairMax) {
  const auto r = run({"optimize", "|00> + |11>", "--partition", "0|1", "--direction", "max", "--restarts", "8",
                      "--seed", "3", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["best"].get<double>(), 1.0071, 5e-4);
  EXPECT_EQ(j["direction"], "max");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["restart_values"].size(), 8u);
}

TEST(Cli, RankBound) {
  const auto r = run({"rank-bound", "|0220> + |2002> - |1111>", "--partition", "0,1|2,3", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["rank_bound"], 9);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"entropy", "|01>"}).code, kUsage);
  EXPECT_EQ(run({"entropy", "|01>", "--partition", "0|2"}).code, kUsage);
  EXPECT_EQ(run({"entropy", "|01>", "--partition", "0,1|"}).code, kUsage);
  EXPECT_EQ(run({"optimize", "|01>", "--partition", "0|1", "--direction", "up"}).code, kUsage);
  EXPECT_EQ(run({"transform", "|010>", "--unitary", data("circular.json")}).code, kUsage);
  EXPECT_EQ(run({"transform", "|01>", "--unitary", data("missing.json")}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
}

TEST(Cli, ParseErrors) {
  const auto r = run({"entropy", "|01", "--partition", "0|1"});
  EXPECT_EQ(r.code, kParse);
  EXPECT_NE(r.err.find("offset 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({"entropy", "|01> - |01>", "--partition", "0|1"}).code, kParse);
  EXPECT_EQ(run({"entropy", "|01> + |001>", "--partition", "0|1"}).code, kParse);
}

TEST(Cli, OversizedOptimizationIsUsageError) {
  const auto r = run({"optimize", "|1000000000000>", "--partition", "0|1,2,3,4,5,6,7,8,9,10,11,12"});
  EXPECT_EQ(r.code, kUsage) << r.err;
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("paper-suite"), std::string::npos);
}

}  // namespace
}  // namespace fockmodes::cli
