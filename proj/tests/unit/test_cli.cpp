#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "weave/cli.hpp"
#include "weave/diagram_io.hpp"

namespace weave {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("weave_cli_test_" + name)).string();
}

std::string write_temp(const std::string& name, const SurfaceDiagram& d) {
  const auto path = temp_path(name);
  std::ofstream(path) << format_diagram(d, true);
  return path;
}

TEST(Cli, BuildPlainWeave) {
  const auto path = temp_path("plain.wv");
  const auto r = run({"build", "--tiling", "(4,4,4,4)", "--method", "Cr", "--m", "1", "--scale", "2", "--seq",
                      "1,2:1,1", "-o", path});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  const auto d = read_diagram_file(path);
  EXPECT_EQ(d.crossing_count(), 4);
  EXPECT_TRUE(is_alternating(d));
  EXPECT_TRUE(isomorphic(d, testing::plain_weave()));
}

TEST(Cli, BuildHyperbolicIsInputError) {
  const auto r = run({"build", "--tiling", "(5,5,5,5)", "--method", "Cr", "--m", "1", "--scale", "1"});
  EXPECT_EQ(r.code, exit_code::input_error);
  EXPECT_NE(r.err.find("UnsupportedTiling"), std::string::npos) << r.err;
}

TEST(Cli, BuildPolycatenane) {
  const auto path = temp_path("poly.wv");
  const auto r = run({"build", "--tiling", "(4,4,4,4)", "--method", "4Br", "--m", "2", "--scale", "1", "-o", path});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_NE(r.out.find("classification: Polycatenane"), std::string::npos) << r.out;
  EXPECT_TRUE(std::filesystem::exists(path));
}

TEST(Cli, AnalyzePlainWeave) {
  const auto r = run({"analyze", write_temp("a.wv", testing::plain_weave())});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_NE(r.out.find("degree.span: 12"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeJsonReport) {
  const auto r = run({"--format", "json-report", "analyze", write_temp("j.wv", testing::plain_weave())});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_NE(r.out.find("\"span\": 12"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeCrossingless) {
  const auto r = run({"analyze", write_temp("z.wv", SurfaceDiagram(1, {}, {}, {FreeLoop{parse_word("a", 1), -1}}))});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_NE(r.out.find("<(1,0)^1>: 1A^0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("winding_set: (1,0)"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeOverBudget) {
  const auto big = r_parallel(testing::plain_weave(), 3);
  ASSERT_GT(big.crossing_count(), kDefaultCrossingBudget);
  const auto r = run({"analyze", write_temp("big.wv", big)});
  EXPECT_EQ(r.code, exit_code::budget_exceeded);
}

TEST(Cli, MissingFileIsInputError) {
  EXPECT_EQ(run({"analyze", temp_path("does_not_exist.wv")}).code, exit_code::input_error);
  EXPECT_EQ(run({"frobnicate"}).code, exit_code::input_error);
}

TEST(Cli, VerifyTaitSuites) {
  EXPECT_EQ(run({"verify", "--suite", "tait1", "--steps", "100"}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", "--suite", "tait2"}).code, exit_code::ok);
}

TEST(Cli, VerifyCatchesCorruptedMoves) {
  const auto good = run({"verify", "--suite", "invariance", "--steps", "30"});
  EXPECT_EQ(good.code, exit_code::ok) << good.out;
  const auto bad = run({"verify", "--suite", "invariance", "--steps", "30", "--mutate"});
  EXPECT_EQ(bad.code, exit_code::violation);
  EXPECT_NE(bad.out.find("trace"), std::string::npos) << bad.out;
}

TEST(Cli, FuzzIsDeterministic) {
  const auto file = write_temp("f.wv", testing::plain_weave());
  const std::vector<std::string> args{"fuzz", file, "--steps", "60", "--seed", "17", "--cap", "12"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, exit_code::ok) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CanonicalizeSets) {
  const auto e = run({"canonicalize", "--set", "", "--genus", "1"});
  ASSERT_EQ(e.code, exit_code::ok) << e.err;
  EXPECT_NE(e.out.find("q_after: 0"), std::string::npos);
  EXPECT_NE(e.out.find("u: 1 0, 0 1"), std::string::npos);
  const auto r = run({"canonicalize", "--set", "(5,3)", "--genus", "1"});
  EXPECT_NE(r.out.find("q_before: 34"), std::string::npos);
  EXPECT_NE(r.out.find("set: (1,0)"), std::string::npos);
}

TEST(Cli, CanonicalizeFromAnalyzedFile) {
  const auto r = run({"canonicalize", write_temp("c.wv", testing::plain_weave())});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_NE(r.out.find("q_before"), std::string::npos);
  EXPECT_NE(r.out.find("u:"), std::string::npos);
}

}  // namespace
}  // namespace weave
