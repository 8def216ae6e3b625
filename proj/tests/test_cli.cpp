#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = umbra::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(CliEval, Examples) {
  auto a = run({"eval", "sph_j", "--n", "0", "--x", "3.14159265358979"});
  EXPECT_EQ(a.code, 0);
  EXPECT_LT(std::fabs(std::stod(a.out)), 1e-10);

  auto b = run({"eval", "struve_h", "--alpha", "0.5", "--x", "3.14159265358979"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NEAR(std::stod(b.out), 0.9003163161571061, 1e-14);

  auto c = run({"eval", "sph_j", "--n", "-1", "--x", "0"});
  EXPECT_EQ(c.code, 2);
  EXPECT_NE(c.err.find("domain error"), std::string::npos);
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(run({"eval", "nope", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "sph_j", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "sph_j", "--n", "1.5", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "sph_j", "--n", "1", "--x", "abc"}).code, 2);
  EXPECT_EQ(run({"eval", "sph_j", "--n", "1", "--x", "1", "--y", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliEval, VerboseJson) {
  auto r = run({"eval", "cyl_j", "--nu=-0.5", "--x", "2", "--verbose", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), -0.23478571040624847, 1e-15);
  EXPECT_EQ(j["path"], "series");
  EXPECT_TRUE(j.contains("terms_used"));
}

TEST(CliVerify, SingleAndUnknown) {
  auto a = run({"verify", "I01", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  const auto recs = lines(a.out);
  ASSERT_EQ(recs.size(), 1u);
  const auto j = nlohmann::json::parse(recs[0]);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_NEAR(j["lhs"].get<double>(), M_PI, 1e-8);
  EXPECT_EQ(run({"verify", "BOGUS"}).code, 2);
  EXPECT_EQ(run({"verify", "I14", "--alpha", "0.5"}).code, 2);
  EXPECT_EQ(run({"verify", "I14", "--alpha", "-0.5"}).code, 0);
}

TEST(CliVerify, JsonSchema) {
  auto r = run({"verify", "I02", "I20", "--format", "json", "--parallelism", "2"});
  ASSERT_EQ(r.code, 0);
  const std::vector<std::string> keys = {"id",      "params",  "lhs",    "rhs",     "abs_err", "rel_err",
                                         "tol_abs", "tol_rel", "status", "seconds", "reason"};
  const auto recs = lines(r.out);
  EXPECT_EQ(recs.size(), 12u + 27u);
  for (const auto& l : recs) {
    EXPECT_EQ(l.find("nan"), std::string::npos);
    const auto j = nlohmann::ordered_json::parse(l);
    std::vector<std::string> got;
    for (const auto& [k, v] : j.items()) got.push_back(k);
    EXPECT_EQ(got, keys);
    for (const char* k : {"lhs", "rhs", "abs_err", "rel_err", "tol_abs", "tol_rel", "seconds"})
      EXPECT_TRUE(j[k].is_number()) << k;
  }
}

TEST(CliVerify, CsvColumns) {
  auto r = run({"verify", "I16", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "id,params,lhs,rhs,abs_err,rel_err,tol_abs,tol_rel,status,seconds,reason");
  EXPECT_EQ(rows[1].rfind("I16,u=1;v=1;x=0.5,", 0), 0u);
}

TEST(CliVerify, ByteIdenticalWithoutTiming) {
  const std::vector<std::string> args = {"verify", "I02", "I09", "I23", "--format", "json", "--no-timing",
                                         "--jitter", "--seed", "9", "--parallelism", "3"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliVerify, FailureExitCode) {
  auto r = run({"verify", "I09", "--max-terms", "2"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliTable, RowsAndSweep) {
  auto a = run({"table", "sph_j", "--n", "2", "--x", "0.1:10:100", "--format", "csv"});
  ASSERT_EQ(a.code, 0);
  const auto rows = lines(a.out);
  ASSERT_EQ(rows.size(), 101u);
  double prev = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i].substr(0, rows[i].find(',')));
    EXPECT_GT(x, prev);
    prev = x;
  }
  EXPECT_DOUBLE_EQ(prev, 10.0);

  auto b = run({"table", "struve_h", "--alpha", "0", "--x", "0.1:5:50", "--format", "json"});
  ASSERT_EQ(b.code, 0);
  const auto first = nlohmann::json::parse(lines(b.out).front());
  EXPECT_NEAR(first["value"].get<double>(), 0.06359126999, 1e-10);
  EXPECT_EQ(lines(b.out).size(), 50u);
}

TEST(CliTable, UsageErrors) {
  EXPECT_EQ(run({"table", "sph_j", "--n", "2", "--x", "0.1:10:0"}).code, 2);
  EXPECT_EQ(run({"table", "sph_j", "--n", "2", "--x", "0.1:10:2000000"}).code, 2);
  EXPECT_EQ(run({"table", "sph_j", "--n", "2", "--x", "0.1:inf:10"}).code, 2);
  EXPECT_EQ(run({"table", "sph_j", "--n", "2", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"table", "sph_j", "--n", "0:2:3", "--x", "1:2:3"}).code, 2);
}

TEST(CliConfig, FileValuesAndOverride) {
  const std::string path = ::testing::TempDir() + "umbra_cli_config.txt";
  {
    std::ofstream f(path);
    f << "# test config\nformat = json\nrel-tol = 1e-10\nno-timing = true\n";
  }
  auto a = run({"verify", "I01", "--config", path});
  ASSERT_EQ(a.code, 0);
  const auto j = nlohmann::json::parse(lines(a.out).front());
  EXPECT_EQ(j["seconds"].get<double>(), 0.0);
  auto b = run({"verify", "I01", "--config", path, "--format", "csv"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(lines(b.out).front().rfind("id,params", 0), 0u);
  {
    std::ofstream f(path);
    f << "colour = blue\n";
  }
  EXPECT_EQ(run({"verify", "I01", "--config", path}).code, 2);
  EXPECT_EQ(run({"verify", "I01", "--config", path + ".missing"}).code, 2);
  std::remove(path.c_str());
}

TEST(CliOut, WritesFile) {
  const std::string path = ::testing::TempDir() + "umbra_cli_out.csv";
  auto r = run({"table", "gamma", "--x", "1:5:5", "--format", "csv", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(lines(ss.str()).size(), 6u);
  std::remove(path.c_str());
}

TEST(CliCatalog, JsonLines) {
  auto r = run({"catalog", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 24u);
  for (const auto& l : recs) {
    const auto j = nlohmann::json::parse(l);
    for (const char* k : {"id", "description", "reference", "params", "tol_abs", "tol_rel"}) EXPECT_TRUE(j.contains(k));
    EXPECT_FALSE(j["reference"]["quote"].get<std::string>().empty());
  }
}

TEST(CliOptions, Validation) {
  EXPECT_EQ(run({"verify", "I01", "--parallelism", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "I01", "--rel-tol", "-1"}).code, 2);
  EXPECT_EQ(run({"verify", "I01", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"eval", "gamma", "--x", "2", "--help"}).code, 0);
}
