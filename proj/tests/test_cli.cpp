#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Result {
  std::string out;
  int status = -1;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(FIBPART_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::size_t count_lines_starting(const std::string& s, const std::string& prefix) {
  std::size_t n = 0, pos = 0;
  while (pos < s.size()) {
    const auto end = s.find('\n', pos);
    if (s.compare(pos, prefix.size(), prefix) == 0) ++n;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return n;
}

}  // namespace

TEST(Cli, RfTen) {
  const Result r = run("rf 10");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run("rf 10 --method dp").out, "2\n");
}

TEST(Cli, RfJson) {
  const auto j = nlohmann::json::parse(run("rf 3 --format json").out);
  EXPECT_EQ(j["r_F"], "2");
}

TEST(Cli, TableThreeRows) {
  const Result r = run("table1 --pmax 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("2.48119430409"), std::string::npos);
  EXPECT_NE(r.out.find("X^3 - 2*X^2 - 4*X + 2"), std::string::npos);
  EXPECT_EQ(count_lines_starting(r.out, "1 "), 1u);
  EXPECT_EQ(count_lines_starting(r.out, "3 "), 1u);
  const auto j = nlohmann::json::parse(run("table1 --pmax 3 --format json").out);
  EXPECT_EQ(j.size(), 3u);
}

TEST(Cli, VerifyClaimsTenPasses) {
  const Result r = run("verify-claims 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(count_lines_starting(r.out, "PASS "), 10u);
  EXPECT_EQ(count_lines_starting(r.out, "FAIL "), 0u);
}

TEST(Cli, PowersumAndSeries) {
  EXPECT_EQ(run("powersum 2 8").out, "17\n");
  const Result s = run("series 1 4 --format csv");
  EXPECT_EQ(s.status, 0);
  EXPECT_EQ(s.out.substr(0, 14), "ell,N,S,ratio\n");
}

TEST(Cli, AutomatonFormats) {
  EXPECT_NE(run("automaton 1 --dot").out.find("digraph"), std::string::npos);
  const auto j = nlohmann::json::parse(run("automaton 2 --json").out);
  EXPECT_EQ(j["states"].size(), 10u);
  const auto m = nlohmann::json::parse(run("automaton 3 --json --minimize").out);
  EXPECT_EQ(m["states"].size(), 16u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("nonsense").status, 2);
  EXPECT_EQ(run("automaton 11").status, 2);
  EXPECT_EQ(run("powersum 1 100000000").status, 2);
  EXPECT_EQ(run("gsr rhok 21").status, 2);
  EXPECT_EQ(run("automaton 2 --format csv").status, 2);
  EXPECT_EQ(run("zbound 3").status, 2);
}

TEST(Cli, VerificationSubcommandsSucceed) {
  EXPECT_EQ(run("lambda 3 --rho").status, 0);
  EXPECT_EQ(run("gsr rhok 8").status, 0);
  EXPECT_EQ(run("gsr kron 3").status, 0);
  EXPECT_EQ(run("gsr trend 5").status, 0);
  EXPECT_EQ(run("zbound 100").status, 0);
}

TEST(Cli, OutputDirectory) {
  const std::string dir = ::testing::TempDir();
  const std::string cmd = "FIBPART_OUTPUT_DIR=" + dir + " " + std::string(FIBPART_CLI_PATH) +
                          " series 2 5 --format csv --output cli_series.csv";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  FILE* f = std::fopen((dir + "/cli_series.csv").c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::array<char, 15> head{};
  ASSERT_EQ(std::fread(head.data(), 1, 14, f), 14u);
  std::fclose(f);
  EXPECT_STREQ(head.data(), "ell,N,S,ratio\n");
}

TEST(Cli, ByteIdenticalReruns) {
  for (const char* args : {"table1 --format json", "series 2 40 --format csv", "gsr rhok 10 --format json",
                           "automaton 3 --dot"}) {
    EXPECT_EQ(run(args).out, run(args).out) << args;
  }
}
