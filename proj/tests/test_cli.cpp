#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qseries::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PassingSelectionExitsZeroWithJson) {
  auto r = cli({"verify", "--id", "eq11", "--id", "eq14", "--order", "40", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["id"], "eq11");
  EXPECT_EQ(j[1]["id"], "eq14");
  EXPECT_EQ(j[1]["effective_order"], 40);
}

TEST(Cli, ModFiveSuiteReportsEveryCheckAndFails) {
  auto r = cli({"verify", "--suite", "mod5", "--order", "40", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  bool eq14 = false;
  for (const auto& rep : j) {
    if (rep["id"] == "eq14") {
      eq14 = rep["passed"].get<bool>();
    }
  }
  EXPECT_TRUE(eq14);
}

TEST(Cli, ModSevenSuiteExitsZero) { EXPECT_EQ(cli({"verify", "--suite", "mod7", "--order", "30"}).code, 0); }

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli({"verify", "--suite", "nosuch"}).code, 2);
  EXPECT_EQ(cli({"verify", "--order", "0", "--id", "eq11"}).code, 2);
  EXPECT_EQ(cli({"verify", "--order", "500", "--id", "eq11"}).code, 2);
  EXPECT_EQ(cli({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"verify", "--bogus"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"partitions", "stats", "--n", "4", "--stat", "bogus"}).code, 2);
  EXPECT_EQ(cli({"series", "nosuch"}).code, 2);
  auto r = cli({"verify", "--suite", "nosuch"});
  EXPECT_NE(r.err.find("nosuch"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, OrderLimitCanBeOverridden) {
  EXPECT_EQ(cli({"verify", "--id", "eq11", "--order", "210", "--allow-large-order"}).code, 0);
  EXPECT_EQ(cli({"verify", "--id", "eq11", "--order", "210", "--max-order", "300"}).code, 0);
}

TEST(Cli, PartitionStatsTable) {
  auto r = cli({"partitions", "stats", "--n", "4", "--k", "5", "--stat", "crank"});
  EXPECT_EQ(r.code, 0) << r.err;
  for (const char* p : {"4 ", "3+1", "2+2", "2+1+1", "1+1+1+1"}) {
    EXPECT_NE(r.out.find(p), std::string::npos) << p;
  }
  EXPECT_NE(r.out.find("Mw(m,5,4)"), std::string::npos);
}

TEST(Cli, SeriesPrinting) {
  auto r = cli({"series", "G", "--order", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6 + O(q^7)\n");
  auto j = nlohmann::json::parse(cli({"series", "master5", "--order", "5", "--format", "json"}).out);
  EXPECT_EQ(j["coefficients"][0], "0");
}

TEST(Cli, ListIsStableAndAnnotated) {
  auto a = cli({"list"});
  auto b = cli({"list"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto pos = a.out.find("eq14");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NE(a.out.find("unproven", pos), std::string::npos);
  EXPECT_NE(a.out.find("arising in the context of Rogers Ramanujan"), std::string::npos);
  EXPECT_EQ(cli({"verify", "--suite", "crank", "--list"}).code, 0);
}
