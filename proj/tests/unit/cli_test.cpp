#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "raag/limits.hpp"

namespace raag::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "raag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(RAAG_TEST_DATA_DIR) + "/" + file; }

TEST(Cli, NormalForm) {
  const auto r = run_args({"nf", "a b a^-1", "--graph", data("k2.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "b\n");
}

TEST(Cli, Multiply) {
  const auto r = run_args({"mul", "a b", "b^-1 a", "--graph", data("empty2.json")});
  EXPECT_EQ(r.out, "a^2\n");
}

TEST(Cli, GrowthJson) {
  const auto r = run_args({"growth", "--graph", data("k2.json"), "--upto", "4", "--oracle", "3", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["series"], nlohmann::json::array({"1", "4", "8", "12"}));
  EXPECT_EQ(j["oracle"], nlohmann::json::array({1, 4, 8, 12}));
  EXPECT_EQ(j["closed_form"], "(1 + 2t + t^2)/(1 - 2t + t^2)");
}

TEST(Cli, RanksAgree) {
  const auto r = run_args({"ranks", "--graph", data("empty2.json"), "--kind", "lcs", "--upto", "5", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["tables"][1]["values"], nlohmann::json::array({2, 1, 2, 3, 6}));
  EXPECT_EQ(j["tables"][1]["method"], "bracket_span");
}

TEST(Cli, RestrictedNeedsPrime) {
  EXPECT_EQ(run_args({"ranks", "--graph", data("path3.json"), "--kind", "restricted"}).code, kParseError);
  EXPECT_EQ(run_args({"lambda", "--graph", data("path3.json"), "--p", "2"}).code, kParseError);
  EXPECT_EQ(run_args({"lambda", "--graph", data("path3.json"), "--p", "3"}).code, kOk);
}

TEST(Cli, Koszul) {
  const auto r = run_args({"koszul", "--graph", data("c4.json"), "--upto", "5", "--domain", "Fp", "--p", "2"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("d^2 = 0: yes"), std::string::npos) << r.out;
  const auto j = run_args({"koszul", "--graph", data("c4.json"), "--upto", "5", "--json"});
  EXPECT_TRUE(nlohmann::json::parse(j.out)["ok"].get<bool>());
}

TEST(Cli, MagnusAndValuation) {
  const auto m = run_args({"magnus", "a^-1", "--graph", data("k2.json"), "--order", "4"});
  EXPECT_EQ(m.out, "1 - a + aa - aaa + O(4)\n");
  const auto v = run_args({"valuation", "a^3", "--graph", data("k2.json"), "--p", "3", "--json"});
  ASSERT_EQ(v.code, kOk) << v.err;
  EXPECT_EQ(nlohmann::json::parse(v.out)["omega_p_valuation"]["value"], 2);
  const auto t = run_args({"valuation", "a^3", "--graph", data("k2.json"), "--p", "3", "--order", "4"});
  EXPECT_EQ(t.out, "omega: 1\nomega_3: 2\n");
}

TEST(Cli, VerifyAllOnPath) {
  const auto r = run_args({"verify-all", "--graph", data("path3.json")});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_args({"cliques", "--graph", data("bad_edge.json")}).code, kParseError);
  EXPECT_EQ(run_args({"nf", "z", "--graph", data("k2.json")}).code, kParseError);
  EXPECT_EQ(run_args({"nf", "a"}).code, kParseError);
  EXPECT_EQ(run_args({"bogus", "--graph", data("k2.json")}).code, kParseError);
  EXPECT_EQ(run_args({"growth", "--graph", data("k2.json"), "--oracle", "6", "--max-states", "10"}).code,
            kResourceLimit);
  set_max_states(kDefaultMaxStates);
  EXPECT_EQ(run_args({"--help"}).code, kOk);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"cliques", "--graph", data("c4.json"), "--json"};
  EXPECT_EQ(run_args(args).out, run_args(args).out);
}

}  // namespace
}  // namespace raag::cli
