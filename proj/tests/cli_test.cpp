#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "gnorm/error.hpp"
#include "gnorm_app/config.hpp"
#include "gnorm_app/report_io.hpp"
#include "gnorm_app/run.hpp"

namespace gnorm::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("gnorm_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result execute_json(const std::string& text) {
  std::ostringstream out, err;
  int code = 0;
  try {
    code = execute(parse_config(text), out, err);
  } catch (const ConfigError& e) {
    err << e.what();
    code = kExitInputError;
  }
  return {code, out.str(), err.str()};
}

const char* kSolveHalving = R"({
  "command": "solve",
  "space": {"kind": "sum_pnorm", "dim": 1, "p": 1},
  "mapping": {"builtin": "halving_shift"},
  "solver": {"tol": 1e-10, "max_iter": 100, "x0": [0]}
})";

TEST(Config, ParsesAllSections) {
  const RunConfig cfg = parse_config(R"({
    "command": "jungck",
    "space": {"kind": "sum_pnorm", "dim": 2, "p": "inf"},
    "mapping": {"matrix": [0.5, 0, 0, 0.5], "offset": [1, 1]},
    "mapping_s": {"builtin": "double_shift", "q": 2},
    "q": 0.25,
    "solver": {"tol": 1e-8, "max_iter": 50, "x0": [1, 2]},
    "sampling": {"n_samples": 100, "seed": 9},
    "output": {"path": "out.csv", "format": "csv"}
  })");
  EXPECT_EQ(cfg.command, "jungck");
  EXPECT_EQ(cfg.space.kind, SpaceKind::sum_pnorm);
  EXPECT_TRUE(std::isinf(cfg.space.p));
  ASSERT_TRUE(cfg.mapping && cfg.mapping_s);
  EXPECT_EQ(cfg.mapping->matrix.size(), 4u);
  EXPECT_EQ(cfg.mapping_s->builtin, "double_shift");
  EXPECT_EQ(*cfg.q, 0.25);
  EXPECT_EQ(cfg.solver.max_iter, 50u);
  EXPECT_EQ(cfg.sampling.seed, 9u);
  EXPECT_EQ(cfg.output.format, "csv");
}

TEST(Config, RoundTrip) {
  const std::vector<std::string> inputs = {
      kSolveHalving,
      R"({"command": "ball-sample", "space": {"kind": "grid_maxsum", "grid_size": 11},
          "ball": {"center": [0,0,0,0,0,0,0,0,0,0,0], "anchor": [1,1,1,1,1,1,1,1,1,1,1],
                   "radius": 4.5, "closed": true},
          "sampling": {"n_samples": 7, "seed": 18446744073709551615}})",
      R"({"command": "check-gmetric", "space": {"kind": "sum_pnorm", "dim": 1}, "gmetric": "rho"})",
  };
  for (const auto& text : inputs) {
    const RunConfig cfg = parse_config(text);
    EXPECT_EQ(parse_config(serialize_config(cfg)), cfg) << text;
  }
}

TEST(Config, GridDimFollowsGridSize) {
  const RunConfig cfg =
      parse_config(R"({"command": "check-axioms", "space": {"kind": "grid_maxsum", "grid_size": 21}})");
  EXPECT_EQ(cfg.space.dim, 21u);
}

TEST(Config, ErrorsNameTheField) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": -1}})", "space.dim"},
      {R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": "two"}})", "space.dim"},
      {R"({"command": "solve", "space": {"kind": "banach"}})", "space.kind"},
      {R"({"command": "solve", "space": {"kind": "sum_pnorm", "p": 0.5}})", "space.p"},
      {R"({"command": "solve", "space": {"kind": "sum_pnorm"}, "extra": 1})", "extra"},
      {R"({"command": "solve", "space": {"kind": "sum_pnorm"}, "solver": {"tol": "x"}})",
       "solver.tol"},
      {R"({"command": "fly", "space": {"kind": "sum_pnorm"}})", "command"},
      {R"({"command": "solve"})", "space"},
      {R"({"command": "solve", "space": {"kind": "sum_pnorm"}, "output": {"format": "xml"}})",
       "output.format"},
  };
  for (const auto& [text, field] : cases) {
    try {
      parse_config(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.field(), field) << text;
      EXPECT_EQ(std::string(e.what()).rfind(field + ":", 0), 0u) << e.what();
    }
  }
  EXPECT_THROW(parse_config("{not json"), ConfigError);
}

TEST(Config, ValidateForCommand) {
  auto cfg = parse_config(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 2}})");
  EXPECT_THROW(validate_for_command(cfg), ConfigError);
  cfg = parse_config(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 2},
                         "mapping": {"matrix": [1, 2, 3]}})");
  try {
    validate_for_command(cfg);
    ADD_FAILURE();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "mapping.matrix");
  }
  cfg = parse_config(R"({"command": "jungck", "space": {"kind": "sum_pnorm", "dim": 1},
                         "mapping": {"builtin": "halving_shift"}, "mapping_s": {"builtin": "identity"}})");
  EXPECT_THROW(validate_for_command(cfg), ConfigError);
}

TEST(Execute, SolveSucceeds) {
  const Result r = execute_json(kSolveHalving);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "solve");
  EXPECT_TRUE(j["report"]["converged"].get<bool>());
  EXPECT_NEAR(j["report"]["fixed_point"][0].get<double>(), 2.0, 1e-9);
}

TEST(Execute, VerificationFailureExitsOne) {
  const Result r = execute_json(
      R"({"command": "check-axioms", "space": {"kind": "max_candidate", "dim": 2},
          "sampling": {"n_samples": 1000}})");
  EXPECT_EQ(r.code, kExitVerificationFailed);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
}

TEST(Execute, UnconvergedSolveExitsOne) {
  const Result r = execute_json(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 1},
      "mapping": {"builtin": "halving_shift"}, "solver": {"max_iter": 3}})");
  EXPECT_EQ(r.code, kExitVerificationFailed);
}

TEST(Execute, SingularSExitsTwo) {
  // S is the zero map, so no LU preimage exists.
  const Result r = execute_json(R"({"command": "jungck", "space": {"kind": "sum_pnorm", "dim": 1},
      "mapping": {"builtin": "halving_shift"}, "mapping_s": {"matrix": [0]}, "q": 0.5})");
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Execute, InputErrorsExitTwo) {
  EXPECT_EQ(execute_json(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 1},
      "mapping": {"builtin": "identity", "k": 1.0}})").code, kExitInputError);
  EXPECT_EQ(execute_json(R"({"command": "expansive", "space": {"kind": "sum_pnorm", "dim": 2},
      "mapping": {"matrix": [1, 2, 2, 4]}})").code, kExitInputError);
  EXPECT_EQ(execute_json(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 1},
      "mapping": {"builtin": "nosuch"}})").code, kExitInputError);
  const Result r = execute_json(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 1},
      "mapping": {"builtin": "halving_shift"}, "output": {"path": "/nonexistent/dir/out.json"}})");
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("output.path"), std::string::npos);
}

TEST(Execute, EstimateK) {
  const Result r = execute_json(R"({"command": "estimate-k", "space": {"kind": "sum_pnorm", "dim": 2},
      "mapping": {"builtin": "halving"}, "sampling": {"n_samples": 200}})");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["k_estimate"].get<double>(), 0.5, 1e-12);
  EXPECT_TRUE(j["is_contraction"].get<bool>());
}

TEST(Execute, EmptyBallWarns) {
  const Result r = execute_json(R"({"command": "ball-sample", "space": {"kind": "sum_pnorm", "dim": 1, "p": 1},
      "ball": {"center": [0], "anchor": [10], "radius": 5}, "sampling": {"n_samples": 3}})");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("empty"), std::string::npos);
  EXPECT_TRUE(json::parse(r.out)["sample"]["empty"].get<bool>());
}

TEST(TraceCsv, RowPerIteration) {
  const Result r = execute_json(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 1},
      "mapping": {"builtin": "halving_shift"}, "output": {"format": "csv"}})");
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines_of(r.out);
  ASSERT_GE(rows.size(), 2u);
  EXPECT_EQ(rows.front(), "n,residual,apriori_bound");
  double prev = INFINITY;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string n, residual, bound;
    std::getline(in, n, ',');
    std::getline(in, residual, ',');
    std::getline(in, bound, ',');
    EXPECT_EQ(std::stoul(n), i - 1);
    const double b = std::stod(bound);
    EXPECT_LE(b, prev);
    EXPECT_LE(std::stod(residual), b);
    prev = b;
  }
}

TEST(TraceCsv, FixedStartHasSingleRow) {
  const Result r = execute_json(R"({"command": "solve", "space": {"kind": "sum_pnorm", "dim": 1},
      "mapping": {"builtin": "halving_shift"}, "solver": {"x0": [2]}, "output": {"format": "csv"}})");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines_of(r.out).size(), 2u);
}

TEST(TraceCsv, EmitToUnwritablePathThrows) {
  SolveReport report;
  EXPECT_THROW(emit_trace_csv(report, "/nonexistent/dir/trace.csv"), std::runtime_error);
}

TEST(ReportIo, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 2.0, 1e-300, -123456.789e10}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Run, OutputFileAndReproducibility) {
  TempDir dir;
  const std::string cfg = write_file(dir.file("cfg.json"), R"({
    "command": "check-axioms", "space": {"kind": "sum_pnorm", "dim": 2},
    "sampling": {"n_samples": 500, "seed": 5}})");
  std::ostringstream out1, err1, out2, err2;
  const Invocation a{"", cfg, dir.file("a.json").string(), std::nullopt};
  const Invocation b{"", cfg, dir.file("b.json").string(), std::nullopt};
  ASSERT_EQ(run(a, out1, err1), kExitOk) << err1.str();
  ASSERT_EQ(run(b, out2, err2), kExitOk);
  const std::string first = read_file(dir.file("a.json"));
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, read_file(dir.file("b.json")));
  EXPECT_FALSE(out1.str().empty());

  std::ostringstream out3, err3;
  const Invocation reseeded{"", cfg, dir.file("c.json").string(), 6};
  ASSERT_EQ(run(reseeded, out3, err3), kExitOk);
  EXPECT_EQ(json::parse(read_file(dir.file("c.json")))["seed"], 6);
}

TEST(Run, MissingConfigFileExitsTwo) {
  std::ostringstream out, err;
  EXPECT_EQ(run(Invocation{"solve", "/nonexistent/cfg.json", std::nullopt, std::nullopt}, out, err),
            kExitInputError);
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(GNORM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
  TempDir dir;
  const std::string ok = write_file(dir.file("ok.json"), kSolveHalving);
  const std::string bad = write_file(dir.file("bad.json"),
                                     R"({"space": {"kind": "sum_pnorm", "dim": "x"}})");
  const std::string failing = write_file(dir.file("fail.json"), R"({
    "space": {"kind": "max_candidate", "dim": 1}, "sampling": {"n_samples": 1000}})");
  EXPECT_EQ(run_binary("solve --config " + ok), 0);
  EXPECT_EQ(run_binary("check-axioms --config " + failing), 1);
  EXPECT_EQ(run_binary("solve --config " + bad), 2);
  EXPECT_EQ(run_binary("frobnicate --config " + ok), 2);
  EXPECT_EQ(run_binary("solve"), 2);
  EXPECT_EQ(run_binary("solve --config " + ok + " --out " + dir.file("o.json").string()), 0);
  EXPECT_TRUE(fs::exists(dir.file("o.json")));
}

}  // namespace
}  // namespace gnorm::app
