#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hamcurve_cli/cli.hpp"
#include "hamcurve_cli/json_io.hpp"

namespace fs = std::filesystem;
using hamcurve::cli::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = hamcurve::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hamcurve_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify", "--bogus", "1"}).code, 2);
  EXPECT_EQ(run({"classify", "--curve", "nope", "--x", "0", "--t", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--x", "0", "--t-range", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--x", "0", "--t-range", "1", "-1"}).code, 2);
  EXPECT_EQ(run({"classify", "--poly", "2*z^3 + 1", "--x", "0", "--t", "0"}).code, 2);
  EXPECT_EQ(run({"phase", "--curve", "linear-cubic", "--grid", "4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ClassifyRegionD) {
  const auto r = run({"classify", "--curve", "trivial-cubic", "--x", "0", "--t", "-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["region"], "D");
  EXPECT_EQ(j["report"]["component_count"], 2);
  EXPECT_EQ(j["genus"], 1);
}

TEST(Cli, ClassifyQuinticAndBurgersHopf) {
  auto r = run({"classify", "--curve", "quintic-linear", "--x", "7", "--t", "-10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["report"]["component_count"], 3);
  r = run({"classify", "--curve", "burgers-hopf", "--y", "1.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["report"]["isolated_points"].size(), 1u);
  EXPECT_DOUBLE_EQ(j["report"]["isolated_points"][0].get<double>(), -0.5);
}

TEST(Cli, SweepNode) {
  const auto r = run({"sweep", "--curve", "trivial-cubic", "--x", "0.2", "--t-range", "-2", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["events"].size(), 1u);
  EXPECT_EQ(j["events"][0]["kind"], "node");
  EXPECT_NEAR(j["events"][0]["t_star"].get<double>(), -0.64633, 1e-5);
}

TEST(Cli, DegenerateSweepExitsOne) {
  const auto r = run({"sweep", "--poly", "z^3 - 3*x^2*z + 2*x^3", "--x", "1", "--t-range", "-1", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("vanishes identically"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--system", "dkdv3", "--family", "kdv3-linear", "--liouville"}).code, 0);
  EXPECT_EQ(run({"verify", "--system", "dkdv3", "--ansatz", R"({"u0":"x","u1":"t","u3":"1"})"}).code, 1);
  EXPECT_EQ(run({"verify", "--system", "nope", "--family", "kdv3-linear"}).code, 2);
}

TEST(Cli, PhaseWritesLabelledSvg) {
  const auto dir = scratch("phase");
  const auto r = run({"--out", dir.string(), "phase", "--figure", "fig7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = slurp(dir / "fig7.svg");
  EXPECT_NE(svg.find(">M<"), std::string::npos);
  EXPECT_NE(svg.find(">m<"), std::string::npos);
  EXPECT_EQ(slurp(dir / "fig7.csv").rfind("x,t\n", 0), 0u);
  EXPECT_LE(Json::parse(r.out)["max_vertex_residual"].get<double>(), 1e-9);
}

TEST(Cli, RenderFigure6) {
  const auto dir = scratch("render");
  const auto r = run({"--out", dir.string(), "render", "--figure", "fig6", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(fs::exists(dir / ("fig6_" + std::to_string(k) + ".svg")));
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["frames"].size(), 3u);
  EXPECT_EQ(j["frames"][2]["components"], 2);
}

TEST(Cli, CharacteristicsCsvOnStdout) {
  const auto r = run({"characteristics", "--preset", "ellipse"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("t,p1,p2,x1,x2,f\n", 0), 0u);
  int rows = 0;
  for (char c : r.out) rows += c == '\n';
  EXPECT_EQ(rows, 22);
}

TEST(Cli, SelftestPasses) {
  const auto r = run({"--seed", "9", "selftest", "--count", "25"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, ConfigFileEquivalentToFlags) {
  const auto dir = scratch("config");
  const fs::path cfg = dir / "sweep.json";
  std::ofstream(cfg) << R"({"command": "sweep", "curve": "linear-cubic", "x": 4, "t-range": [-2, 11]})";
  const auto a = run({"--config", cfg.string()});
  const auto b = run({"sweep", "--curve", "linear-cubic", "--x", "4", "--t-range", "-2", "11"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  // Command-line options override the file.
  const auto c = run({"--config", cfg.string(), "sweep", "--x", "0"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(Json::parse(c.out)["x"], "0");
}

TEST(Cli, OutputIndependentOfWorkers) {
  const auto d1 = scratch("w1"), d8 = scratch("w8");
  for (const char* fig : {"fig9", "fig8"}) {
    const std::string cmd = std::string(fig) == "fig9" ? "phase" : "render";
    ASSERT_EQ(run({"--workers", "1", "--out", d1.string(), cmd, "--figure", fig}).code, 0);
    ASSERT_EQ(run({"--workers", "8", "--out", d8.string(), cmd, "--figure", fig}).code, 0);
  }
  int files = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(d8 / e.path().filename())) << e.path();
  }
  EXPECT_EQ(files, 2 + 6);
}
