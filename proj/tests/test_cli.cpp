#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lpc/cli.hpp"

using namespace lpc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  const Result m = run({"check", "4", "5"});
  EXPECT_EQ(m.code, 0);
  const auto j = nlohmann::json::parse(m.out);
  EXPECT_EQ(j["status"], "Member");
  EXPECT_TRUE(j["witness"].contains("lo"));
  EXPECT_TRUE(j["witness"].contains("hi"));
  EXPECT_TRUE(j.contains("flags"));
  EXPECT_TRUE(j.contains("min_phi"));

  EXPECT_EQ(run({"check", "3", "3.5"}).code, 1);
  const Result bad = run({"check", "5", "4"});
  EXPECT_EQ(bad.code, 64);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(run({"check", "4"}).code, 64);
  EXPECT_EQ(run({"check", "x", "5"}).code, 64);
  EXPECT_EQ(run({"bogus"}).code, 64);
  EXPECT_EQ(run({"check", "4", "5", "--precision", "16"}).code, 64);
}

TEST(Cli, CheckCsv) {
  const Result r = run({"check", "4", "5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "a,");
  EXPECT_EQ(run({"check", "4", "5", "--format", "xml"}).code, 64);
}

TEST(Cli, Certify) {
  const Result r = run({"certify", "4", "5", "--depth", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entries"].size(), 11u);
  ASSERT_EQ(j["zero_counts"].size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(j["zero_counts"][i]["count"], 2 * (i + 1));
  EXPECT_TRUE(check_certificate_json(j).empty());

  EXPECT_EQ(run({"certify", "4", "5", "--depth", "3"}).code, 64);
  EXPECT_EQ(run({"certify", "4", "5", "--depth", "2"}).code, 64);
  EXPECT_EQ(run({"certify", "3", "3.5", "--depth", "8"}).code, 1);
}

TEST(Cli, Constants) {
  const Result q = run({"qinf", "--tol", "1e-6"});
  ASSERT_EQ(q.code, 0) << q.err;
  const auto jq = nlohmann::json::parse(q.out);
  EXPECT_LE(std::stod(jq["qinf"]["lo"].get<std::string>()), 3.23363666);
  EXPECT_GE(std::stod(jq["qinf"]["hi"].get<std::string>()), 3.23363666);

  const Result c = run({"cn", "2", "--tol", "1e-8"});
  ASSERT_EQ(c.code, 0) << c.err;
  const auto jc = nlohmann::json::parse(c.out);
  EXPECT_LE(std::stod(jc["cn"]["lo"].get<std::string>()), 4.0);
  EXPECT_GE(std::stod(jc["cn"]["hi"].get<std::string>()), 4.0);
  EXPECT_EQ(run({"cn", "1"}).code, 64);
  EXPECT_EQ(run({"qinf", "--tol", "-1"}).code, 64);
}

TEST(Cli, ScanDeterministicAcrossThreads) {
  const Result a = run({"scan", "--a", "3.4:3.6:0.1", "--b", "3.5:4.5:0.25", "--format", "csv", "--threads", "1"});
  const Result b = run({"scan", "--a", "3.4:3.6:0.1", "--b", "3.5:4.5:0.25", "--format", "csv", "--threads", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Result j = run({"scan", "--a", "3.4:3.6:0.1", "--b", "3.5:4.5:0.25"});
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), std::count(a.out.begin(), a.out.end(), '\n') - 1);
  EXPECT_EQ(run({"scan", "--a", "3:4"}).code, 64);
}

TEST(Cli, Boundary) {
  const Result r = run({"boundary", "3.5", "4", "3.1", "--tol", "1e-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["regime"], "bounded");
  EXPECT_EQ(j[1]["regime"], "hutchinson");
  EXPECT_EQ(j[2]["regime"], "no-member");
  EXPECT_TRUE(j[0]["b_star"].contains("lo"));
}

TEST(Cli, MsVerify) {
  const Result r = run({"ms-verify", "4", "5", "--max-degree", "8", "--corpus", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["jensen"].size(), 8u);
  EXPECT_EQ(run({"ms-verify", "3", "3.5"}).code, 1);
}

TEST(Cli, OutFileAndEnvPrecision) {
  const std::string path = ::testing::TempDir() + "lpc_cli_out.json";
  EXPECT_EQ(run({"check", "4", "5", "--out", path}).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str())["status"], "Member");

  ::setenv("LPC_PRECISION", "20", 1);
  EXPECT_EQ(run({"check", "4", "5"}).code, 64);
  EXPECT_EQ(run({"check", "4", "5", "--precision", "64"}).code, 0);
  ::setenv("LPC_PRECISION", "nope", 1);
  EXPECT_EQ(run({"check", "4", "5"}).code, 64);
  ::unsetenv("LPC_PRECISION");
}
