// Copyright 2026 The alphagrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "alphagrad/cli/commands.h"
#include "alphagrad/cli/config.h"
#include "alphagrad/cli/csv.h"
#include "alphagrad/cli/svg.h"
#include "alphagrad/envs/ball_wall.h"
#include "alphagrad/noise.h"

namespace alphagrad::cli {
namespace {

namespace fs = std::filesystem;

double Phi(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

ExperimentConfig Config(const std::string& text) { return ParseConfig(text); }

std::string ErrorOf(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::vector<double> Column(const ResultTable& t, const std::string& name) {
  const int c = t.ColumnIndex(name);
  EXPECT_GE(c, 0) << name;
  std::vector<double> out;
  for (const auto& row : t.rows) out.push_back(row[c]);
  return out;
}

// A scratch directory removed when the test ends.
class ScratchDir {
 public:
  ScratchDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("alphagrad_") + info->test_suite_name() + "_" +
             info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }

  const fs::path& path() const { return path_; }
  fs::path Write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return path_ / name;
  }
  std::string Read(const std::string& name) const {
    std::ifstream in(path_ / name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  fs::path path_;
};

// Runs the CLI binary; returns its exit status.
int RunCli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " " + ALPHAGRAD_CLI_PATH + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ------------------------------------------------------------------ config

TEST(ConfigTest, MinimalConfigUsesDefaults) {
  const ExperimentConfig c =
      Config(R"({"command": "estimate", "env": {"name": "heaviside"}})");
  EXPECT_EQ(c.command, "estimate");
  EXPECT_EQ(c.env_name, "heaviside");
  EXPECT_EQ(c.estimator.delta, 0.05);
  EXPECT_TRUE(c.estimator.use_baseline);
  EXPECT_FALSE(c.estimator.num_samples.has_value());
  EXPECT_EQ(c.seed, 0u);
  const Resolved r = Resolve(c);
  EXPECT_EQ(r.num_samples, r.entry.defaults.num_samples);
  EXPECT_EQ(r.sigma, r.entry.defaults.sigma);
}

TEST(ConfigTest, UnknownKeysAreRejectedWithLine) {
  const std::string err = ErrorOf(
      "{\n  \"command\": \"estimate\",\n  \"env\": {\"name\": \"heaviside\"},"
      "\n  \"sed\": 3\n}");
  EXPECT_NE(err.find("line 4"), std::string::npos) << err;
  EXPECT_NE(err.find("sed"), std::string::npos) << err;
}

TEST(ConfigTest, MalformedJsonNamesLine) {
  const std::string err = ErrorOf("{\n  \"command\": \"estimate\",\n  oops\n}");
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
  EXPECT_NE(err.find("malformed JSON"), std::string::npos) << err;
}

TEST(ConfigTest, PreconditionsAreCheckedUpFront) {
  const std::string base =
      R"({"command": "estimate", "env": {"name": "quadratic"}, )";
  EXPECT_FALSE(ErrorOf(base + R"("estimator": {"N": 1}})").empty());
  EXPECT_FALSE(ErrorOf(base + R"("estimator": {"sigma": -1}})").empty());
  EXPECT_FALSE(ErrorOf(base + R"("estimator": {"delta": 1.5}})").empty());
  EXPECT_FALSE(ErrorOf(base + R"("optimizer": {"steps": 0}})").empty());
  EXPECT_FALSE(ErrorOf(base + R"("optimizer": {"estimator": "sgd"}})").empty());
  EXPECT_FALSE(ErrorOf(base + R"("seed": -4})").empty());
  EXPECT_TRUE(ErrorOf(base + R"("estimator": {"R": 0}})").empty());
}

TEST(ConfigTest, ResolveChecksDimensions) {
  const ExperimentConfig c = Config(
      R"({"command": "estimate", "env": {"name": "quadratic",
          "params": {"horizon": 3}}, "theta": [1, 2]})");
  EXPECT_THROW(Resolve(c), ConfigError);
  EXPECT_THROW(Resolve(Config(R"({"command": "estimate",
      "env": {"name": "pushing", "params": {"stiffness": 1}}})")),
               ConfigError);
}

TEST(ConfigTest, CommandSectionsAreValidated) {
  EXPECT_NE(ErrorOf(R"({"command": "sweep", "env": {"name": "coulomb"},
                        "sweep": {"parameter": "nu", "grid": []}})")
                .find("grid"),
            std::string::npos);
  EXPECT_THROW(ValidateForCommand(Config(
                   R"({"command": "landscape", "env": {"name": "heaviside"},
                       "landscape": {"lo": [1], "hi": [0]}})")),
               ConfigError);
  EXPECT_THROW(ValidateForCommand(Config(
                   R"({"command": "sweep", "env": {"name": "coulomb"}})")),
               ConfigError);
}

// --------------------------------------------------------------------- csv

TEST(CsvTest, RealsRoundTripExactly) {
  NoiseStream s(1, "csv", 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = s.Normal() * std::pow(10.0, (static_cast<int>(s() % 600)) - 300);
    EXPECT_EQ(std::stod(FormatReal(x)), x);
  }
  EXPECT_EQ(FormatReal(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(FormatReal(0.1), "0.10000000000000001");
}

TEST(CsvTest, CrlfAndRoundTrip) {
  ResultTable t;
  t.schema = "demo";
  t.columns = {"a", "b"};
  t.optional_columns = {"b"};
  t.AddRow({1.0, 0.25});
  t.AddRow({-3.5, std::numeric_limits<double>::quiet_NaN()});
  const std::string csv = ToCsv(t);
  EXPECT_EQ(csv, "a,b\r\n1,0.25\r\n-3.5,nan\r\n");
  const ResultTable back = ParseCsv(csv);
  EXPECT_EQ(back.columns, t.columns);
  ASSERT_EQ(back.rows.size(), 2u);
  EXPECT_EQ(back.rows[0], t.rows[0]);
  EXPECT_TRUE(std::isnan(back.rows[1][1]));
}

TEST(CsvTest, TableInvariants) {
  ResultTable t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.AddRow({1.0}), std::logic_error);
  t.AddRow({1.0, std::numeric_limits<double>::quiet_NaN()});
  EXPECT_THROW(t.Validate(), std::logic_error);
  t.optional_columns = {"b"};
  EXPECT_NO_THROW(t.Validate());
  EXPECT_EQ(ToCsv(ResultTable{"empty", {"x"}, {}, {}}), "x\r\n");
}

// --------------------------------------------------------------------- svg

ResultTable Curve() {
  ResultTable t;
  t.columns = {"x", "y", "z"};
  for (int i = 1; i <= 5; ++i) t.AddRow({double(i), i * 2.0, i * i - 4.0});
  return t;
}

int Count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1)) {
    ++n;
  }
  return n;
}

TEST(SvgTest, OnePolylinePerSeries) {
  const PlotSpec one = ParsePlotSpec({{"x", "x"}, {"series", {"y"}}});
  EXPECT_EQ(Count(EmitSvg(Curve(), one), "<polyline"), 1);
  const PlotSpec two = ParsePlotSpec({{"x", "x"}, {"series", {"y", "z"}}});
  EXPECT_EQ(Count(EmitSvg(Curve(), two), "<polyline"), 2);
}

TEST(SvgTest, LogAxisRejectsNonpositiveWithRow) {
  const PlotSpec spec =
      ParsePlotSpec({{"x", "x"}, {"series", {"z"}}, {"log_y", true}});
  try {
    EmitSvg(Curve(), spec);
    FAIL() << "expected a config error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("row 0"), std::string::npos)
        << e.what();
  }
}

TEST(SvgTest, DeterministicAndValidated) {
  const PlotSpec spec = ParsePlotSpec(
      {{"x", "x"}, {"series", {"y"}}, {"log_x", true}, {"title", "t"}});
  EXPECT_EQ(EmitSvg(Curve(), spec), EmitSvg(Curve(), spec));
  EXPECT_THROW(EmitSvg(Curve(), ParsePlotSpec({{"x", "x"}, {"series", {"w"}}})),
               ConfigError);
  EXPECT_THROW(ParsePlotSpec({{"x", "x"}, {"series", {"y"}}, {"colour", 1}}),
               ConfigError);
}

// ----------------------------------------------------------------- estimate

TEST(EstimateCommandTest, HeavisideFirstOrderRowIsZero) {
  const CommandOutput out = RunEstimate(Config(
      R"({"command": "estimate", "env": {"name": "heaviside"},
          "theta": [0.2], "estimator": {"N": 500}, "seed": 3})"));
  ASSERT_EQ(out.exit_code, kExitOk);
  ASSERT_EQ(out.table.rows.size(), 3u);
  const auto& fobg = out.table.rows[1];
  EXPECT_EQ(fobg[out.table.ColumnIndex("estimator")], 1.0);
  EXPECT_EQ(fobg[out.table.ColumnIndex("g_0")], 0.0);
  EXPECT_EQ(fobg[out.table.ColumnIndex("var")], 0.0);
}

TEST(EstimateCommandTest, QuadraticEstimatorsAgree) {
  const CommandOutput out = RunEstimate(Config(
      R"({"command": "estimate", "env": {"name": "quadratic",
          "params": {"horizon": 2, "state_weight": 1}},
          "theta": [0.5, -1], "estimator": {"N": 20000, "sigma": 0.5},
          "seed": 8})"));
  ASSERT_EQ(out.exit_code, kExitOk);
  const auto& z = out.table.rows[0];
  const auto& f = out.table.rows[1];
  const int se = out.table.ColumnIndex("stderr");
  for (const char* g : {"g_0", "g_1"}) {
    const int c = out.table.ColumnIndex(g);
    EXPECT_LE(std::abs(z[c] - f[c]), 3.0 * std::hypot(z[se], f[se])) << g;
  }
}

// -------------------------------------------------------------------- sweep

TEST(SweepCommandTest, OneRowPerGridPoint) {
  const CommandOutput out = RunSweep(Config(
      R"({"command": "sweep", "env": {"name": "pushing",
          "params": {"horizon": 20}}, "estimator": {"N": 50},
          "sweep": {"parameter": "k", "grid": [10, 100, 1000, 10000]}})"));
  EXPECT_EQ(out.exit_code, kExitOk);
  ASSERT_EQ(out.table.rows.size(), 4u);
  EXPECT_EQ(Column(out.table, "value"),
            (std::vector<double>{10, 100, 1000, 10000}));
}

TEST(SweepCommandTest, CoulombSlopeRecoverableFromCsv) {
  const CommandOutput out = RunSweep(Config(
      R"({"command": "sweep", "env": {"name": "coulomb"}, "theta": [0],
          "estimator": {"N": 20000, "sigma": 1}, "seed": 2,
          "sweep": {"parameter": "nu", "grid": [0.001, 0.01, 0.1, 1]}})"));
  const ResultTable t = ParseCsv(ToCsv(out.table));
  const auto nu = Column(t, "value");
  const auto var = Column(t, "var_fobg");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < nu.size(); ++i) {
    const double x = std::log(nu[i]), y = std::log(var[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = nu.size();
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  EXPECT_GE(slope, -1.3);
  EXPECT_LE(slope, -0.7);
}

// ----------------------------------------------------------------- optimize

TEST(OptimizeCommandTest, EmitsOneRowPerIteration) {
  const CommandOutput out = RunOptimize(Config(
      R"({"command": "optimize", "env": {"name": "quadratic"},
          "estimator": {"N": 8}, "optimizer": {"steps": 10,
          "eval_samples": 10}})"));
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.table.rows.size(), 10u);
  EXPECT_EQ(Count(ToCsv(out.table), "\r\n"), 11);
}

TEST(OptimizeCommandTest, StiffPushingDivergesWithPartialTable) {
  // double the stiffness from 1e6 until the run diverges
  double k = 1e6;
  CommandOutput out;
  for (int i = 0; i < 1100; ++i, k *= 2) {
    nlohmann::json doc = {
        {"command", "optimize"},
        {"env", {{"name", "pushing"}, {"params", {{"k", k}}}}},
        {"estimator", {{"N", 8}}},
        {"optimizer", {{"estimator", "fobg"}, {"steps", 3},
                       {"eval_samples", 8}}}};
    out = RunOptimize(Config(doc.dump()));
    if (out.exit_code != kExitOk) break;
  }
  ASSERT_EQ(out.exit_code, kExitDiverged) << "no divergence up to k = " << k;
  ASSERT_FALSE(out.table.rows.empty());
  EXPECT_LE(out.table.rows.size(), 3u);
  EXPECT_TRUE(std::isnan(out.table.rows.back()[out.table.ColumnIndex("cost")]));
  EXPECT_NO_THROW(out.table.Validate());

  ScratchDir dir;
  std::ostringstream k_text;
  k_text.precision(17);
  k_text << k;
  const fs::path cfg = dir.Write(
      "c.json", R"({"command": "optimize", "env": {"name": "pushing",
          "params": {"k": )" + k_text.str() + R"(}}, "estimator": {"N": 8},
          "optimizer": {"estimator": "fobg", "steps": 3,
          "eval_samples": 8}})");
  EXPECT_EQ(RunCli("optimize --config " + cfg.string() + " --out " +
                   dir.path().string()),
            kExitDiverged);
  EXPECT_EQ(dir.Read("optimize.csv"), ToCsv(out.table));
}

// ---------------------------------------------------------------- landscape

TEST(LandscapeCommandTest, HeavisideSmoothedColumnIsNormalCdf) {
  const CommandOutput out = RunLandscape(Config(
      R"({"command": "landscape", "env": {"name": "heaviside"},
          "estimator": {"sigma": 1},
          "landscape": {"lo": [-3], "hi": [3], "points": 61, "N": 20000}})"));
  ASSERT_EQ(out.exit_code, kExitOk);
  ASSERT_EQ(out.table.rows.size(), 61u);
  const auto theta = Column(out.table, "theta_0");
  const auto smooth = Column(out.table, "smoothed");
  const auto se = Column(out.table, "smoothed_stderr");
  for (size_t i = 0; i < theta.size(); ++i) {
    EXPECT_LE(std::abs(smooth[i] - Phi(theta[i])), 3 * se[i] + 1e-12)
        << "theta " << theta[i];
  }
}

TEST(LandscapeCommandTest, BallWallHasOneJump) {
  const CommandOutput out = RunLandscape(Config(
      R"({"command": "landscape", "env": {"name": "ball_wall"},
          "estimator": {"N": 16},
          "landscape": {"lo": [0.3], "hi": [1.2], "points": 181}})"));
  const auto cost = Column(out.table, "cost");
  std::vector<double> inc;
  for (size_t i = 1; i < cost.size(); ++i) {
    inc.push_back(std::abs(cost[i] - cost[i - 1]));
  }
  int jumps = 0;
  for (size_t i = 0; i < inc.size(); ++i) {
    const double left = i > 0 ? inc[i - 1] : 0.0;
    const double right = i + 1 < inc.size() ? inc[i + 1] : 0.0;
    jumps += inc[i] > 10 * std::max(left, right);
  }
  EXPECT_EQ(jumps, 1);
}

TEST(LandscapeCommandTest, ZeroCostGivesZeroColumns) {
  const CommandOutput out = RunLandscape(Config(
      R"({"command": "landscape", "env": {"name": "quadratic",
          "params": {"horizon": 2, "input_weight": 0}},
          "estimator": {"N": 16},
          "landscape": {"coords": [0, 1], "lo": [-1, -1], "hi": [1, 1],
                        "points": 5}})"));
  ASSERT_EQ(out.table.rows.size(), 25u);
  for (const auto& row : out.table.rows) {
    for (size_t c = 2; c < row.size(); ++c) EXPECT_EQ(row[c], 0.0);
  }
}

// ---------------------------------------------------------------- binary

TEST(BinaryTest, MalformedConfigExitsTwoWithoutFiles) {
  ScratchDir dir;
  const fs::path cfg = dir.Write("bad.json", "{\"command\": ");
  const fs::path out = dir.path() / "out";
  EXPECT_EQ(RunCli("estimate --config " + cfg.string() + " --out " +
                   out.string()),
            kExitConfig);
  EXPECT_FALSE(fs::exists(out));
}

TEST(BinaryTest, EmptySweepGridExitsTwo) {
  ScratchDir dir;
  const fs::path cfg = dir.Write(
      "c.json", R"({"env": {"name": "coulomb"},
                   "sweep": {"parameter": "nu", "grid": []}})");
  const fs::path out = dir.path() / "out";
  EXPECT_EQ(RunCli("sweep --config " + cfg.string() + " --out " + out.string()),
            kExitConfig);
  EXPECT_FALSE(fs::exists(out));
}

TEST(BinaryTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunCli("frobnicate --config x.json"), kExitConfig);
  EXPECT_EQ(RunCli("estimate"), kExitConfig);
}

TEST(BinaryTest, OutputIsByteIdenticalAcrossRunsAndThreads) {
  ScratchDir dir;
  const fs::path cfg = dir.Write(
      "c.json", R"({"env": {"name": "ball_wall"}, "estimator": {"N": 64},
                   "optimizer": {"steps": 10, "eval_samples": 64}})");
  const std::string args = "optimize --config " + cfg.string() + " --seed 7";
  ASSERT_EQ(RunCli(args + " --out " + (dir.path() / "a").string(),
                   "ALPHAGRAD_THREADS=1"),
            kExitOk);
  ASSERT_EQ(RunCli(args + " --out " + (dir.path() / "b").string(),
                   "ALPHAGRAD_THREADS=4"),
            kExitOk);
  ASSERT_EQ(RunCli(args + " --out " + (dir.path() / "c").string()), kExitOk);
  const std::string a = dir.Read("a/optimize.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, dir.Read("b/optimize.csv"));
  EXPECT_EQ(a, dir.Read("c/optimize.csv"));
}

TEST(BinaryTest, PlotSpecWritesSvgOrRejectsLogOfNonpositive) {
  ScratchDir dir;
  const fs::path cfg = dir.Write(
      "c.json", R"({"env": {"name": "heaviside"}, "estimator": {"N": 32},
                   "landscape": {"lo": [-1], "hi": [1], "points": 5}})");
  const fs::path good = dir.Write(
      "good.json", R"({"x": "theta_0", "series": ["cost", "smoothed"]})");
  const fs::path bad = dir.Write(
      "bad.json", R"({"x": "theta_0", "series": ["cost"], "log_y": true})");
  const std::string base = "landscape --config " + cfg.string();
  EXPECT_EQ(RunCli(base + " --plot " + good.string() + " --out " +
                   (dir.path() / "g").string()),
            kExitOk);
  EXPECT_EQ(Count(dir.Read("g/landscape.svg"), "<polyline"), 2);
  EXPECT_EQ(RunCli(base + " --plot " + bad.string() + " --out " +
                   (dir.path() / "b").string()),
            kExitConfig);
  EXPECT_FALSE(fs::exists(dir.path() / "b" / "landscape.csv"));
}

}  // namespace
}  // namespace alphagrad::cli
