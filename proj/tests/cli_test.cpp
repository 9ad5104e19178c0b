// Runs the installed binary against the documented command forms and pins
// the output contract: TSV records, JSON documents, and exit codes.

#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PELLGF_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

TEST(CliSolve, KnownSolutions) {
  const RunResult r13 = run_cli("solve 13");
  EXPECT_EQ(r13.exit_code, 0);
  EXPECT_EQ(r13.out, "13\t18\t5\t-1\t[3;1,1,1,1,6]\n");

  const RunResult r3 = run_cli("solve 3");
  EXPECT_EQ(r3.exit_code, 0);
  EXPECT_EQ(r3.out, "3\t2\t1\t1\t[1;1,2]\n");
}

TEST(CliSolve, RejectsSquares) {
  const RunResult r = run_cli("solve 4");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSolve, JsonDocument) {
  const RunResult r = run_cli("solve 13 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["m"], "13");
  EXPECT_EQ(j["a"], "18");
  EXPECT_EQ(j["b"], "5");
  EXPECT_EQ(j["epsilon"], "-1");
  EXPECT_EQ(j["cf"]["a0"], "3");
  EXPECT_EQ(j["cf"]["period"].size(), 5u);
}

TEST(CliSeq, TermTables) {
  EXPECT_EQ(run_cli("seq 2 L 4").out, "0\t1\n1\t1\n2\t3\n3\t7\n4\t17\n");
  EXPECT_EQ(run_cli("seq 3 F 3").out, "0\t0\n1\t1\n2\t4\n3\t15\n");
  EXPECT_EQ(run_cli("seq 3 F 0").out, "0\t0\n");
}

TEST(CliClassify, IntegerVerdicts) {
  const RunResult a = run_cli("classify 3 F 1/4");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, "INTEGER\t4\nF_RATIO\t1\n");

  const RunResult b = run_cli("classify 2 L -1");
  EXPECT_EQ(b.exit_code, 0);
  EXPECT_EQ(b.out, "INTEGER\t1\nL_RATIO_INV\t0\n");

  const RunResult c = run_cli("classify classic L 1/3");
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_EQ(c.out, "INTEGER\t3\nL_RATIO\t1\n");
}

TEST(CliClassify, NonIntegerExitCode) {
  const RunResult r = run_cli("classify 2 F 1/3");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "NON_INTEGER\t3/2\n");
}

TEST(CliClassify, MalformedRationalIsUsageError) {
  EXPECT_EQ(run_cli("classify 3 F 1/0").exit_code, 2);
  EXPECT_EQ(run_cli("classify 3 F abc").exit_code, 2);
  EXPECT_EQ(run_cli("classify 3 X 1/2").exit_code, 2);
}

TEST(CliSweep, ReportAndExitCode) {
  const RunResult r = run_cli("sweep 3 F 20");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("integer_points=5"), std::string::npos);
  EXPECT_NE(r.out.find("violations=0"), std::string::npos);

  const RunResult classic = run_cli("sweep classic F 8");
  EXPECT_EQ(classic.exit_code, 0);
  EXPECT_NE(classic.out.find("integer_points=11"), std::string::npos);
}

TEST(CliSweep, RadiusOnly) {
  const RunResult r = run_cli("sweep 2 F 12 --radius-only");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("integer_points=2"), std::string::npos);
  EXPECT_NE(r.out.find("POINT\t2/5\t10\tF_RATIO:2"), std::string::npos);

  EXPECT_EQ(run_cli("sweep classic F 8 --radius-only").exit_code, 2);
}

TEST(CliSweep, JobsDoNotChangeOutput) {
  const RunResult serial = run_cli("sweep 3 F 50 --jobs 1");
  const RunResult parallel = run_cli("sweep 3 F 50 --jobs 3");
  EXPECT_EQ(serial.exit_code, 0);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST(CliIdentities, PassLine) {
  const RunResult r = run_cli("identities 2 30");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "PASS 9 identities, grid n<=30\n");
}

TEST(CliLevelSet, RootLists) {
  EXPECT_EQ(run_cli("level-set 3 F 4").out, "4/1, 1/4\n");
  EXPECT_EQ(run_cli("level-set 3 F 1").out, "\n");
  EXPECT_EQ(run_cli("level-set 3 L 0").out, "1/2\n");
  const RunResult r = run_cli("level-set 2 F -2");
  EXPECT_NE(r.out.find("-2/1"), std::string::npos);
  EXPECT_NE(r.out.find("1/2"), std::string::npos);
}

TEST(CliEval, ClosedFormAndPartial) {
  const RunResult r = run_cli("eval 3 L 1/4 --partial 10");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("value\t8/1\n"), std::string::npos);
  EXPECT_NE(r.out.find("integer\t1\n"), std::string::npos);
  EXPECT_NE(r.out.find("within_radius\t1\n"), std::string::npos);
  EXPECT_NE(r.out.find("partial_sum\t"), std::string::npos);
  EXPECT_NE(r.out.find("difference\t"), std::string::npos);

  const RunResult outside = run_cli("eval 3 L 2");
  EXPECT_NE(outside.out.find("value\t1/1\n"), std::string::npos);
  EXPECT_NE(outside.out.find("within_radius\t0\n"), std::string::npos);
}

TEST(CliEval, JsonDocument) {
  const RunResult r = run_cli("eval 2 F 2/5 --format json");
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "10/1");
  EXPECT_EQ(j["is_integer"], true);
  EXPECT_EQ(j["within_radius"], true);
}

TEST(CliSweep, JsonDocument) {
  const RunResult r = run_cli("sweep 2 F 12 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["target"], "2");
  EXPECT_EQ(j["bound"], "12");
  EXPECT_EQ(j["integer_points"].size(), 7u);
  EXPECT_EQ(j["violations"].size(), 0u);
  EXPECT_EQ(j["box_family_agree"], true);
  EXPECT_EQ(j["integer_points"][0]["x"], "-5/2");
  EXPECT_EQ(j["integer_points"][0]["witnesses"][0]["family"], "F_RATIO_INV");
}

TEST(CliGeneral, OutFileMirrorsStdout) {
  const std::string path = "/tmp/pellgf_cli_test_report.tsv";
  std::remove(path.c_str());
  const RunResult r = run_cli("sweep 3 F 20 --out " + path);
  EXPECT_EQ(r.exit_code, 0);
  FILE* f = fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string file_contents;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) file_contents.append(buf.data(), n);
  fclose(f);
  std::remove(path.c_str());
  EXPECT_EQ(file_contents, r.out);
}

TEST(CliGeneral, UnknownCommandAndHelp) {
  EXPECT_EQ(run_cli("bogus").exit_code, 2);
  EXPECT_EQ(run_cli("--unknown-flag").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("").exit_code, 2);
}

}  // namespace
