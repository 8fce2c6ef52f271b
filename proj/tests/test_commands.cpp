#include <doctest.h>

#include <cmath>
#include <map>
#include <nlohmann/json.hpp>

#include "curvedwave/commands.hpp"
#include "curvedwave/errors.hpp"
#include "curvedwave/report.hpp"

using namespace curvedwave;
using nlohmann::json;

namespace {

RunConfig config(CommandKind kind) {
  RunConfig cfg;
  cfg.command = kind;
  return cfg;
}

std::vector<std::vector<std::string>> csv_rows(const CommandResult& r) {
  REQUIRE(r.exit_code == kExitOk);
  return report::parse_csv(r.payload);
}

}  // namespace

TEST_CASE("spectrum table") {
  auto cfg = config(CommandKind::spectrum);
  cfg.N_max = 4;
  const auto rows = csv_rows(run(cfg));
  REQUIRE(rows.size() == 16);
  CHECK(rows[0] == std::vector<std::string>{"N", "n", "n_r", "L", "type", "energy_over_kappa",
                                            "degeneracy_of_N", "energy"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][0] == "4") CHECK(rows[i][6] == "25");
  }

  cfg.N_max = 0;
  const auto ground = csv_rows(run(cfg));
  REQUIRE(ground.size() == 2);
  CHECK(std::stod(ground[1][7]) == 0.0);

  cfg.N_max = 7;
  const auto unit = csv_rows(run(cfg));
  cfg.kappa = 2.0;
  const auto doubled = csv_rows(run(cfg));
  REQUIRE(unit.size() == doubled.size());
  for (std::size_t i = 1; i < unit.size(); ++i) {
    CHECK(std::stod(doubled[i][7]) == 2.0 * std::stod(unit[i][7]));
  }
}

TEST_CASE("spectrum usage errors") {
  auto cfg = config(CommandKind::spectrum);
  CHECK(run(cfg).exit_code == kExitUsage);
  cfg.N_max = 3;
  cfg.kappa = 0.0;
  CHECK(run(cfg).exit_code == kExitUsage);
  cfg.kappa = -1.0;
  CHECK(run(cfg).exit_code == kExitUsage);
  cfg.kappa = 1.0;
  cfg.N_max = -2;
  CHECK(run(cfg).exit_code == kExitUsage);
}

TEST_CASE("polynomial curves") {
  auto cfg = config(CommandKind::polynomials);
  cfg.n_list = {4};
  const auto rows = csv_rows(run(cfg));
  std::map<std::string, std::vector<double>> curves;
  for (std::size_t i = 1; i < rows.size(); ++i) curves[rows[i][1]].push_back(std::stod(rows[i][5]));
  CHECK(curves.size() == 8);
  for (const auto& [L, values] : curves) {
    REQUIRE(values.size() == static_cast<std::size_t>(kCurveSamples));
    int changes = 0;
    double last = 0.0;
    for (double v : values) {
      if (std::abs(v) < 1e-12) continue;
      if (last != 0.0 && (v > 0) != (last > 0)) ++changes;
      last = v;
    }
    CHECK(changes == 4);
  }

  cfg.n_list = {13};
  cfg.L_list = {0};
  const auto odd = csv_rows(run(cfg));
  const int m = kCurveSamples;
  for (int i = 0; i < m; ++i) {
    const double a = std::stod(odd[1 + i][5]), b = std::stod(odd[m - i][5]);
    CHECK(std::abs(a + b) < 1e-12);
  }

  cfg.n_list = {0};
  cfg.L_list = {0};
  const auto flat = csv_rows(run(cfg));
  for (std::size_t i = 1; i < flat.size(); ++i) CHECK(flat[i][5] == "1");
}

TEST_CASE("polynomial JSON carries exact coefficients and matching curves") {
  auto cfg = config(CommandKind::polynomials);
  cfg.n_list = {5};
  cfg.L_list = {2};
  const auto csv = csv_rows(run(cfg));
  cfg.format = OutputFormat::json;
  const auto r = run(cfg);
  REQUIRE(r.exit_code == kExitOk);
  const auto j = json::parse(r.payload);
  const auto& poly = j["polynomials"][0];
  CHECK(poly["n"] == 5);
  CHECK(poly["coeffs"].size() == 6);
  const auto& radial = poly["curve"]["radial_value"];
  REQUIRE(radial.size() + 1 == csv.size());
  for (std::size_t i = 0; i < radial.size(); ++i) {
    CHECK(radial[i].get<double>() == std::stod(csv[i + 1][5]));
    CHECK(poly["curve"]["r"][i].get<double>() == std::stod(csv[i + 1][2]));
  }
}

TEST_CASE("limit datasets") {
  auto cfg = config(CommandKind::limit);
  const auto rows = csv_rows(run(cfg));
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) < std::stod(rows[i - 1][4]));

  cfg.L_list = {3};
  cfg.format = OutputFormat::json;
  const auto j = json::parse(run(cfg).payload);
  CHECK(j["strictly_decreasing"] == true);
  CHECK(j["members"].size() == 4);
  CHECK(j["r"].size() == j["reference"].size());
  CHECK(j["members"][0]["values"].size() == j["r"].size());

  cfg.format = OutputFormat::csv;
  const auto table = csv_rows(run(cfg));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(j["members"][i]["sup_distance"].get<double>() == std::stod(table[i + 1][4]));
  }

  cfg.L_list = {0};
  cfg.n_list = {20};
  cfg.r_max = 1e3;
  const auto bad = run(cfg);
  CHECK(bad.exit_code == kExitUsage);
  CHECK(bad.payload.find("hemisphere") != std::string::npos);
  cfg.r_max.reset();
  cfg.L_list = {0, 1};
  CHECK(run(cfg).exit_code == kExitUsage);
}

TEST_CASE("verify suites") {
  auto cfg = config(CommandKind::verify);
  cfg.suite = "orthogonality";
  cfg.format = OutputFormat::json;
  const auto r = run(cfg);
  CHECK(r.exit_code == kExitOk);
  const auto j = json::parse(r.payload);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() >= 8);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("achieved"));
    CHECK(c.contains("required"));
  }

  cfg.suite = "shooting";
  CHECK(run(cfg).exit_code == kExitOk);
  cfg.suite = "spectral";
  CHECK(run(cfg).exit_code == kExitUsage);
}

TEST_CASE("outputs are deterministic") {
  auto spec = config(CommandKind::spectrum);
  spec.N_max = 9;
  spec.kappa = 0.7;
  auto poly = config(CommandKind::polynomials);
  for (auto fmt : {OutputFormat::csv, OutputFormat::json}) {
    spec.format = poly.format = fmt;
    CHECK(run(spec).payload == run(spec).payload);
    CHECK(run(poly).payload == run(poly).payload);
  }
}

TEST_CASE("name parsing") {
  CHECK(command_from_string("limit") == CommandKind::limit);
  CHECK_THROWS_AS(command_from_string("plot"), UsageError);
  CHECK(format_from_string("json") == OutputFormat::json);
  CHECK_THROWS_AS(format_from_string("xml"), UsageError);
}
