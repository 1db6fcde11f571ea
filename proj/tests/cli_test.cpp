#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "orbidiamond/orbifold_diamond.hpp"

using namespace orbidiamond;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, QuinticCensus) {
  const auto r = invoke({"census", "--d", "5", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 40 60 24\n");
}

TEST(Cli, CensusJsonTotals) {
  const auto r = invoke({"census", "--d", "5", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 125);
  EXPECT_EQ(j["quintic_types"]["two"], 40);
}

TEST(Cli, DiamondText) {
  const auto r = invoke({"diamond", "--d", "5", "--n", "4", "--variant", "ht-invariant"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("101"), std::string::npos);
  EXPECT_EQ(r.out, render_diamond(ht_table_cy(5, 4, true)));
}

TEST(Cli, DiamondJsonRoundTrips) {
  for (std::string v : {"HOmega-sum", "HOmega-invariant", "HT-sum", "HT-invariant"}) {
    const auto r = invoke({"diamond", "--d", "4", "--n", "3", "--variant", v, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = table_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(t.entries, compute_table(4, 3, parse_variant(v)).entries);
    EXPECT_EQ(nlohmann::json::parse(r.out), to_json(t));
  }
}

TEST(Cli, DiamondCsv) {
  const auto r = invoke({"diamond", "--d", "3", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q,p,dim\n0,0,1\n0,1,1\n1,0,1\n1,1,1\n");
}

TEST(Cli, DiamondUsesCacheDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / ("orbidiamond_cli_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const auto first = invoke({"diamond", "--d", "4", "--n", "3", "--cache-dir", dir.string()});
  ASSERT_EQ(first.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "d4_n3_HT-invariant.json"));
  const auto second = invoke({"diamond", "--d", "4", "--n", "3", "--cache-dir", dir.string()});
  EXPECT_EQ(first.out, second.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, FixedLocusJson) {
  const auto r = invoke({"fixed-locus", "--d", "5", "--n", "4", "--sector", "1,1,4,4,0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["components"].size(), 2u);
  EXPECT_EQ(j["components"][0]["age"]["num"], 2);
  EXPECT_EQ(j["components"][1]["age"]["num"], 1);
}

TEST(Cli, FractionalAgesPrintedExactly) {
  const auto r = invoke({"fixed-locus", "--d", "5", "--n", "8", "--sector", "1,1,1,2,2,2,2,4,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("age 11/5"), std::string::npos);
  EXPECT_NE(r.out.find("age 17/5"), std::string::npos);
}

TEST(Cli, SectorsFilter) {
  const auto r = invoke({"sectors", "--d", "5", "--n", "4", "--variant", "HOmega-sum", "--sector", "1,4,0,0,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1,4,0,0,0): (1,1)=1 (1,2)=6 (2,1)=6 (2,2)=1\n");
}

TEST(Cli, PairReportsRanks) {
  const auto r = invoke({"pair", "--d", "5", "--n", "4", "--sector", "4,4,2,0,0", "--sector", "4,4,2,0,0",
                         "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["components"].size(), 2u);
  EXPECT_EQ(j["components"][1]["coords"], (std::vector<int>{3, 4}));
  EXPECT_EQ(j["components"][1]["gamma_rank"], 2);
  EXPECT_EQ(j["components"][1]["epsilon"], 2);
}

TEST(Cli, BassQuillen) {
  EXPECT_EQ(invoke({"bass-quillen", "--d", "4", "--n", "3"}).code, 0);
  const auto r = invoke({"bass-quillen", "--d", "5", "--n", "4", "--sector", "2,3,0,0,0", "--sector", "1,1,3,0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("copies=4"), std::string::npos);
}

TEST(Cli, ProductTable) {
  const auto r = invoke({"product-table", "--d", "3", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["basis"].size(), 4u);
  EXPECT_EQ(invoke({"product-table", "--d", "3", "--n", "3"}).code, 3);
}

TEST(Cli, VerifyElliptic) {
  const auto r = invoke({"verify", "--d", "3", "--n", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 6u);
}

TEST(Cli, VerifyNonCalabiYauSkipsCrossChecks) {
  const auto r = invoke({"verify", "--d", "3", "--n", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"][5]["status"], "skipped");
}

TEST(Cli, VerifyIgnoresCache) {
  ::setenv("ORBIDIAMOND_CACHE", "/nonexistent/orbidiamond", 1);
  const auto a = invoke({"verify", "--d", "4", "--n", "3"});
  ::unsetenv("ORBIDIAMOND_CACHE");
  const auto b = invoke({"verify", "--d", "4", "--n", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(std::filesystem::exists("/nonexistent/orbidiamond"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"census", "--d", "5"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate", "--d", "5", "--n", "4"}).code, 2);
  EXPECT_EQ(invoke({"diamond", "--d", "5", "--n", "4", "--variant", "nope"}).code, 2);
  EXPECT_EQ(invoke({"fixed-locus", "--d", "5", "--n", "4", "--sector", "1,1,1"}).code, 2);
  EXPECT_EQ(invoke({"fixed-locus", "--d", "5", "--n", "4", "--sector", "1,1,1,1,0"}).code, 2);
  EXPECT_EQ(invoke({"fixed-locus", "--d", "5", "--n", "4"}).code, 2);
  EXPECT_EQ(invoke({"pair", "--d", "5", "--n", "4", "--sector", "1,4,0,0,0", "--sector", "1,4,0,0,0",
                    "--format", "csv"}).code,
            2);
  EXPECT_EQ(invoke({"diamond", "--d", "4", "--n", "4", "--variant", "HT-sum"}).code, 3);
  EXPECT_EQ(invoke({"diamond", "--d", "5", "--n", "4", "--max-enum", "10"}).code, 4);
  EXPECT_EQ(invoke({"census", "--help"}).code, 0);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const auto one = invoke({"verify", "--d", "5", "--n", "4", "--format", "json", "--threads", "1"});
  const auto four = invoke({"verify", "--d", "5", "--n", "4", "--format", "json", "--threads", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
}
