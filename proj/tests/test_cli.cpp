#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "gauge/cli.hpp"
#include "gauge/config.hpp"

using namespace gauge;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("gauge_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
  std::string path(const std::string& name) { return (dir / name).string(); }
};

std::string slurp(const std::string& path) { return config::read_file(path); }

}  // namespace

TEST_CASE("cmd_integrate writes a report and honors exit codes") {
  TempDir td;
  const std::string cfg = td.file("linear_body.json", R"({
    "dimension": 2,
    "integrand": {"name": "linear_body"},
    "mode": "perron",
    "path": "geometric",
    "stop": {"kind": "norm", "epsilon": 1e-3}
  })");
  cli::CommonArgs args;
  args.config_path = cfg;
  args.out_path = td.path("report.json");
  args.quiet = true;
  CHECK(cli::cmd_integrate(args) == 0);
  const auto rep = config::json::parse(slurp(args.out_path));
  CHECK(rep.at("status") == "OK");
  CHECK(rep.at("result").contains("vertices"));
  CHECK(rep.at("stop_rule").at("epsilon") == 1e-3);

  // invalid epsilon -> exit 2
  const std::string bad = td.file("bad.json", R"({
    "dimension": 2,
    "integrand": {"name": "linear_body"},
    "stop": {"kind": "norm", "epsilon": -1}
  })");
  args.config_path = bad;
  CHECK(cli::cmd_integrate(args) == 2);

  // unreadable config -> exit 2
  args.config_path = td.path("missing.json");
  CHECK(cli::cmd_integrate(args) == 2);

  // path routing: d=3 defaults to the embedded path
  const std::string d3 = td.file("d3.json", R"({
    "dimension": 3,
    "grid_size": 26,
    "integrand": {"name": "interval_0t"},
    "stop": {"kind": "norm", "epsilon": 1e-2}
  })");
  args.config_path = d3;
  args.out_path = td.path("d3.json.out");
  CHECK(cli::cmd_integrate(args) == 0);
  const auto rep3 = config::json::parse(slurp(args.out_path));
  CHECK(rep3.at("path") == "embedded");
  CHECK(rep3.at("result").contains("support_values"));
}

TEST_CASE("cmd_integrate accepts order stops and not-integrable outcomes") {
  TempDir td;
  const std::string cfg = td.file("order.json", R"({
    "dimension": 1,
    "integrand": {"name": "interval_0t"},
    "stop": {"kind": "order", "base": 1.0, "ratio": 0.5, "index": 8}
  })");
  cli::CommonArgs args;
  args.config_path = cfg;
  args.out_path = td.path("order_report.json");
  args.quiet = true;
  CHECK(cli::cmd_integrate(args) == 0);
  const auto rep = config::json::parse(slurp(args.out_path));
  CHECK(rep.at("stop_rule").at("kind") == "order");

  const std::string osc = td.file("osc.json", R"({
    "dimension": 1,
    "integrand": {"name": "single_poly", "powers": [1]},
    "refinement_cap": 3,
    "stop": {"kind": "norm", "epsilon": 1e-12}
  })");
  args.config_path = osc;
  args.out_path = td.path("osc_report.json");
  CHECK(cli::cmd_integrate(args) == 0);  // a NOT-INTEGRABLE report is still exit 0
  const auto rep2 = config::json::parse(slurp(args.out_path));
  CHECK(rep2.at("status") == "NOT-INTEGRABLE-AT-TOLERANCE");
}

TEST_CASE("cmd_verify runs manifests and rejects unknown ids") {
  TempDir td;
  const std::string manifest = td.file("manifest.json", R"({
    "checks": [
      {"id": "sup_selection", "fixture": {"name": "interval_0t", "dim": 1},
       "params": {"base": 1.0, "ratio": 0.5, "index": 10}},
      {"id": "order_decomposition", "fixture": {"name": "linear_triangle", "dim": 2},
       "params": {"index": 8}}
    ]
  })");
  cli::CommonArgs args;
  args.config_path = manifest;
  args.out_path = td.path("verify.json");
  args.quiet = true;
  CHECK(cli::cmd_verify(args) == 0);  // SKIPPED rows allowed
  const auto reports = config::json::parse(slurp(args.out_path));
  REQUIRE(reports.size() == 2);
  CHECK(reports.at(0).at("verdict") == "PASS");
  CHECK(reports.at(1).at("verdict") == "SKIPPED");
  const std::string csv = slurp(td.path("verify.csv"));
  CHECK(csv.find("theorem_id,fixture,verdict,max_residual") == 0);
  CHECK(csv.find("SKIPPED") != std::string::npos);

  const std::string unknown = td.file("unknown.json", R"({
    "checks": [{"id": "thm_unknown", "fixture": {"name": "interval_0t", "dim": 1}}]
  })");
  args.config_path = unknown;
  CHECK(cli::cmd_verify(args) == 2);
}

TEST_CASE("cmd_verify is byte-identical across runs") {
  TempDir td;
  const std::string manifest = td.file("manifest.json", R"({
    "checks": [
      {"id": "nonneg_decomposition", "fixture": {"name": "linear_body", "dim": 2},
       "params": {"epsilon": 1e-3}},
      {"id": "sigma_additivity", "fixture": {"name": "constant", "dim": 2},
       "params": {"epsilon": 1e-3, "pieces": 6}}
    ]
  })");
  cli::CommonArgs args;
  args.config_path = manifest;
  args.quiet = true;
  args.out_path = td.path("a.json");
  REQUIRE(cli::cmd_verify(args) == 0);
  args.out_path = td.path("b.json");
  REQUIRE(cli::cmd_verify(args) == 0);
  CHECK(slurp(td.path("a.json")) == slurp(td.path("b.json")));
  CHECK(slurp(td.path("a.csv")) == slurp(td.path("b.csv")));
}

TEST_CASE("cmd_convergence emits antitone gap columns") {
  TempDir td;
  const std::string cfg = td.file("conv.json", R"({
    "dimension": 2,
    "integrand": {"name": "linear_body"},
    "max_level": 8,
    "stop": {"kind": "norm", "epsilon": 1e-6}
  })");
  cli::CommonArgs args;
  args.config_path = cfg;
  args.out_path = td.path("conv.csv");
  args.quiet = true;
  CHECK(cli::cmd_convergence(args) == 0);
  std::istringstream in(slurp(args.out_path));
  std::string line;
  std::getline(in, line);
  CHECK(line == "level,cells,hausdorff_gap,tag_perturbation_gap,elapsed_ms");
  double prev_tag = 1e300;
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 5);
    const double tag_gap = std::stod(cells[3]);
    if (rows > 0) CHECK(tag_gap <= prev_tag * 1.1 + 1e-12);  // antitone within 10% noise
    prev_tag = tag_gap;
    ++rows;
  }
  CHECK(rows == 9);

  // constant integrand: gaps identically zero
  const std::string ccfg = td.file("conv_const.json", R"({
    "dimension": 2,
    "integrand": {"name": "constant"},
    "max_level": 4
  })");
  args.config_path = ccfg;
  args.out_path = td.path("conv_const.csv");
  CHECK(cli::cmd_convergence(args) == 0);
  std::istringstream in2(slurp(args.out_path));
  std::getline(in2, line);
  while (std::getline(in2, line)) {
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    CHECK(std::stod(cells[2]) <= 1e-12);
    CHECK(std::stod(cells[3]) <= 1e-12);
  }

  // bracket mode carries the 2K/n bound column
  const std::string bcfg = td.file("conv_bracket.json", R"({
    "dimension": 1,
    "integrand": {"name": "sym_interval"},
    "bracket": true,
    "cells": [10, 100, 1000]
  })");
  args.config_path = bcfg;
  args.out_path = td.path("conv_bracket.csv");
  CHECK(cli::cmd_convergence(args) == 0);
  std::istringstream inved(slurp(args.out_path));
  std::getline(inved, line);
  CHECK(line == "level,cells,hausdorff_gap,tag_perturbation_gap,elapsed_ms,bracket_bound");
  std::getline(inved, line);
  CHECK(line.find(",10,") != std::string::npos);
  CHECK(line.rfind(",0.2") != std::string::npos);  // 2K/n with K=1, n=10
}

TEST_CASE("identical configs produce byte-identical integrate and embed outputs") {
  TempDir td;
  const std::string icfg = td.file("i.json", R"({
    "dimension": 2,
    "integrand": {"name": "sym_interval"},
    "stop": {"kind": "norm", "epsilon": 1e-4}
  })");
  cli::CommonArgs args;
  args.quiet = true;
  args.config_path = icfg;
  args.out_path = td.path("i1.json");
  REQUIRE(cli::cmd_integrate(args) == 0);
  args.out_path = td.path("i2.json");
  REQUIRE(cli::cmd_integrate(args) == 0);
  CHECK(slurp(td.path("i1.json")) == slurp(td.path("i2.json")));

  const std::string ecfg = td.file("e.json", R"({
    "dimension": 2, "grid_size": 16,
    "bodies": [{"ball_poly": 7}, {"box": {"lo": [0, 0], "hi": [1, 2]}}]
  })");
  args.config_path = ecfg;
  args.out_path = td.path("e1.csv");
  REQUIRE(cli::cmd_embed(args) == 0);
  args.out_path = td.path("e2.csv");
  REQUIRE(cli::cmd_embed(args) == 0);
  CHECK(slurp(td.path("e1.csv")) == slurp(td.path("e2.csv")));
}

TEST_CASE("cmd_convergence gauge driver uses Cousin partitions") {
  TempDir td;
  const std::string cfg = td.file("conv_gauge.json", R"({
    "dimension": 1,
    "integrand": {"name": "interval_0t"},
    "driver": "gauge",
    "gauge": {"kind": "constant", "value": 0.4},
    "max_level": 5
  })");
  cli::CommonArgs args;
  args.config_path = cfg;
  args.out_path = td.path("conv_gauge.csv");
  args.quiet = true;
  CHECK(cli::cmd_convergence(args) == 0);
  std::istringstream in(slurp(args.out_path));
  std::string line;
  std::getline(in, line);
  CHECK(line == "level,cells,hausdorff_gap,tag_perturbation_gap,elapsed_ms");
  std::size_t prev_cells = 0;
  int rows = 0;
  while (std::getline(in, line)) {
    const std::size_t cells = std::stoul(line.substr(line.find(',') + 1));
    if (rows > 0) CHECK(cells >= prev_cells);  // shrinking gauges refine
    prev_cells = cells;
    ++rows;
  }
  CHECK(rows == 6);

  const std::string bad = td.file("conv_bad.json", R"({
    "dimension": 1,
    "integrand": {"name": "interval_0t"},
    "driver": "nonsense"
  })");
  args.config_path = bad;
  CHECK(cli::cmd_convergence(args) == 2);
}

TEST_CASE("cmd_embed dumps support vectors") {
  TempDir td;
  const std::string cfg = td.file("embed.json", R"({
    "dimension": 1,
    "bodies": [{"interval": [0, 1]}, {"interval": [0, 2]}]
  })");
  cli::CommonArgs args;
  args.config_path = cfg;
  args.out_path = td.path("embed.csv");
  args.quiet = true;
  CHECK(cli::cmd_embed(args) == 0);
  std::istringstream in(slurp(args.out_path));
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header == "u_1(1),u_2(-1)");
  CHECK(row1 == "1,0");
  CHECK(row2 == "2,0");

  // empty body list: header only
  const std::string empty = td.file("embed_empty.json", R"({
    "dimension": 2, "grid_size": 8, "bodies": []
  })");
  args.config_path = empty;
  args.out_path = td.path("embed_empty.csv");
  CHECK(cli::cmd_embed(args) == 0);
  std::istringstream in2(slurp(args.out_path));
  int lines = 0;
  std::string l;
  while (std::getline(in2, l)) ++lines;
  CHECK(lines == 1);

  // inconsistent body literal -> exit 2
  const std::string bad = td.file("embed_bad.json", R"({
    "dimension": 2, "grid_size": 8, "bodies": [{"vertices": []}]
  })");
  args.config_path = bad;
  CHECK(cli::cmd_embed(args) == 2);
}

TEST_CASE("translated square embeddings differ by the support of the shift") {
  TempDir td;
  const std::string cfg = td.file("embed2.json", R"({
    "dimension": 2,
    "grid_size": 64,
    "bodies": [
      {"box": {"lo": [0, 0], "hi": [1, 1]}},
      {"box": {"lo": [1, 0], "hi": [2, 1]}}
    ]
  })");
  cli::CommonArgs args;
  args.config_path = cfg;
  args.out_path = td.path("embed2.csv");
  args.quiet = true;
  REQUIRE(cli::cmd_embed(args) == 0);
  std::istringstream in(slurp(args.out_path));
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  auto split = [](const std::string& s) {
    std::vector<double> v;
    std::istringstream is(s);
    std::string cell;
    while (std::getline(is, cell, ',')) v.push_back(std::stod(cell));
    return v;
  };
  const std::vector<double> a = split(row1), b = split(row2);
  REQUIRE(a.size() == 64);
  double sup_gap = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sup_gap = std::max(sup_gap, std::fabs(a[j] - b[j]));
  CHECK(sup_gap == doctest::Approx(1.0).epsilon(1e-12));  // translate by (1,0)
}
