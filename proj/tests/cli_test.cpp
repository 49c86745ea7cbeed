#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"svn-corona"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = svn::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("svn-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& file) {
  std::ifstream in(file);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(CliPhi, PrintsValueAndBranch) {
  const auto r = run({"phi", "--left", "path:10", "--right", "path:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "9 (Prop3.1b)\n");
}

TEST(CliPhi, UnsupportedExitsTwo) {
  const auto r = run({"phi", "--left", "complete:8", "--right", "path:4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.rfind("unsupported", 0), 0u);
}

TEST(CliPhi, BadArgumentsExitFour) {
  EXPECT_EQ(run({"phi", "--left", "path:2", "--right", "path:3"}).code, 4);
  EXPECT_EQ(run({"phi", "--left", "wheel:5", "--right", "path:3"}).code, 4);
  EXPECT_EQ(run({"phi", "--left", "path:5"}).code, 4);
  EXPECT_EQ(run({"frobnicate"}).code, 4);
  EXPECT_EQ(run({}).code, 4);
}

TEST(CliTable, PathStarRow) {
  const auto r = run({"table", "--left", "path", "--right", "star", "--n", "3..9", "--t", "4..4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n9,4,8,Thm3.4:t+4<n<=2t+5\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.rfind("n,t,phi,branch\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
}

TEST(CliTable, MarkdownAndStable) {
  const auto a = run({"table", "--left", "complete", "--right", "complete", "--n", "2..6", "--t", "1..3",
                      "--format", "markdown"});
  const auto b = run({"table", "--left", "complete", "--right", "complete", "--n", "2..6", "--t", "1..3",
                      "--format", "markdown"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("| 6 | 1 | 5 | Thm6.6:t=1,n>4 even |"), std::string::npos) << a.out;
}

TEST(CliTable, QuotesCommasAndRejectsBadRange) {
  const auto r = run({"table", "--left", "complete", "--right", "complete", "--n", "6", "--t", "2"});
  EXPECT_NE(r.out.find("\"Thm6.6:(n,t) in {(2,2),(3,2)} or n>=6,t=2\""), std::string::npos) << r.out;
  EXPECT_EQ(run({"table", "--left", "path", "--right", "star", "--n", "9..3", "--t", "4"}).code, 4);
  EXPECT_EQ(run({"table", "--left", "path", "--right", "star", "--n", "3..x", "--t", "4"}).code, 4);
  EXPECT_EQ(run({"table", "--left", "path", "--right", "star", "--n", "3", "--t", "4", "--format", "xml"}).code, 4);
}

TEST_F(CliFiles, ColorThenVerifyRoundTrip) {
  const auto c = run({"color", "--left", "cycle:6", "--right", "star:3", "--out", path("c.json").c_str(),
                      "--graph-out", path("g.json").c_str(), "--dot", path("c.dot").c_str()});
  ASSERT_EQ(c.code, 0) << c.err;
  const auto doc = svn::Json::parse(slurp(path("c.json")));
  EXPECT_EQ(doc["colors"], 6);
  EXPECT_EQ(doc["branch"], "Thm4.4:t+3<=n<=2t+4");
  EXPECT_NE(slurp(path("c.dot")).find("doublecircle"), std::string::npos);

  EXPECT_EQ(run({"verify", "--coloring", path("c.json").c_str(), "--graph", path("g.json").c_str()}).code, 0);
  const auto v = run({"verify", "--coloring", path("c.json").c_str()});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(svn::Json::parse(v.out)["is_b_coloring"]);
}

TEST_F(CliFiles, VerifyRejectsBrokenColoring) {
  ASSERT_EQ(run({"color", "--left", "path:10", "--right", "path:3", "--out", path("c.json").c_str()}).code, 0);
  auto doc = svn::Json::parse(slurp(path("c.json")));
  doc["assignment"][0] = doc["assignment"][10];  // u_0 now clashes with s_{0,1}
  std::ofstream(path("bad.json")) << doc.dump();
  const auto r = run({"verify", "--coloring", path("bad.json").c_str()});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(svn::Json::parse(r.out)["proper"]);

  doc["assignment"].erase(0);
  std::ofstream(path("short.json")) << doc.dump();
  EXPECT_EQ(run({"verify", "--coloring", path("short.json").c_str()}).code, 1);
}

TEST_F(CliFiles, GenAndOracleOnSubdivision) {
  ASSERT_EQ(run({"gen", "--left", "complete:5", "--subdivision", "--out", path("s.json").c_str()}).code, 0);
  const auto r = run({"oracle", "--graph", path("s.json").c_str()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 (chi 2)\n");
}

TEST_F(CliFiles, GenCoronaMatchesLibrary) {
  ASSERT_EQ(run({"gen", "--left", "star:3", "--right", "cycle:4", "--out", path("g.json").c_str()}).code, 0);
  const auto g = svn::graph_from_json(svn::Json::parse(slurp(path("g.json"))));
  EXPECT_EQ(g, svn::svn_corona(svn::FamilySpec{svn::FamilyKind::Star, 3}, svn::FamilySpec{svn::FamilyKind::Cycle, 4}));
}

TEST(CliGen, EdgelessLeftRejected) {
  EXPECT_EQ(run({"gen", "--left", "complete:1", "--right", "path:3"}).code, 4);
  EXPECT_EQ(run({"gen", "--left", "complete:1"}).code, 0);
}

TEST(CliOracle, BudgetExceededExitsThree) {
  EXPECT_EQ(run({"oracle", "--left", "complete:5", "--right", "path:3"}).code, 3);
  EXPECT_EQ(run({"oracle", "--left", "path:3", "--right", "path:3", "--max-vertices", "10"}).code, 3);
  EXPECT_EQ(run({"oracle", "--left", "path:3", "--right", "path:3", "--budget-seconds", "0"}).code, 4);
}

TEST(CliOracle, SmallCorona) {
  const auto r = run({"oracle", "--left", "cycle:3", "--right", "path:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("5 ", 0), 0u);
}

TEST(CliColor, UnsupportedExitsTwo) {
  EXPECT_EQ(run({"color", "--left", "complete:8", "--right", "path:4"}).code, 2);
  EXPECT_EQ(run({"color", "--left", "complete:1", "--right", "path:4"}).code, 4);
}

TEST(CliHelp, ExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("selftest"), std::string::npos);
}
