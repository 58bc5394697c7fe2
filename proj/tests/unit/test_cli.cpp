#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(EVENHOLE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("evenhole_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, RecognizeExitCodes) {
  EXPECT_EQ(run("recognize " + write_temp("c6", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")).code, 1);
  EXPECT_EQ(run("recognize " + write_temp("c7", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n")).code, 0);
  EXPECT_EQ(run("recognize " + write_temp("loop", "0 0\n")).code, 2);
  EXPECT_EQ(run("recognize /nonexistent/graph.txt").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, JsonVerdictUsesInputIds) {
  const std::string file = write_temp("ids", "10 11\n11 12\n12 13\n13 10\n");
  CliRun r = run("--json recognize " + file);
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "contains-even-hole");
  EXPECT_EQ(j["hole"], (std::vector<long>{10, 11, 12, 13}));
  EXPECT_TRUE(j.contains("counters"));
}

TEST(Cli, FindPrintsAHole) {
  CliRun r = run("find " + write_temp("c6b", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "0 1 2 3 4 5\n");
}

TEST(Cli, GenPipesIntoRecognize) {
  CliRun r = run("gen cycle:8 --out-format graph6 | " + std::string(EVENHOLE_CLI_PATH) +
              " recognize -");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run("gen bogus:3").code, 2);
}

TEST(Cli, Graph6Input) {
  EXPECT_EQ(run("recognize --format graph6 " + write_temp("k4", "C~\n")).code, 0);
}

TEST(Cli, OracleAndAudit) {
  const std::string c6 = write_temp("c6c", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  EXPECT_EQ(run("oracle " + c6).code, 1);
  CliRun a = run("--json audit " + c6);
  EXPECT_EQ(a.code, 0);
  auto j = nlohmann::json::parse(a.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 6u);
  EXPECT_EQ(j[0]["check"], "major-parity");
  EXPECT_EQ(j[0]["status"], "PASS");
}

TEST(Cli, Difftest) {
  EXPECT_EQ(run("difftest --max-n 5").code, 0);
  EXPECT_EQ(run("difftest --max-n 9").code, 2);
}

}  // namespace
