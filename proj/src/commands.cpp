#include "curvedwave/commands.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "curvedwave/errors.hpp"
#include "curvedwave/euclid_limit.hpp"
#include "curvedwave/radial_polynomials.hpp"
#include "curvedwave/report.hpp"
#include "curvedwave/spectrum.hpp"
#include "curvedwave/verification.hpp"

namespace curvedwave {

using nlohmann::json;

CommandKind command_from_string(const std::string& s) {
  if (s == "spectrum") return CommandKind::spectrum;
  if (s == "polynomials") return CommandKind::polynomials;
  if (s == "limit") return CommandKind::limit;
  if (s == "verify") return CommandKind::verify;
  throw UsageError("unknown command '" + s + "'");
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw UsageError("unknown format '" + s + "' (expected csv or json)");
}

namespace {

const std::vector<int> kFigureN = {4, 5, 12, 13};
const std::vector<int> kFigureL = {0, 1, 2, 3, 4, 5, 6, 8};
const std::vector<int> kLimitN = {20, 24, 32, 40};
const std::vector<std::string> kSuites = {"orthogonality", "residuals", "shooting", "hyperbolic",
                                          "all"};

void require_nonnegative(const std::vector<int>& values, const char* what) {
  for (int v : values) {
    if (v < 0) throw UsageError(std::string(what) + " values must be non-negative");
  }
}

Curvature positive_kappa(const RunConfig& cfg) {
  const double k = cfg.kappa.value_or(1.0);
  if (!(k > 0.0) || !std::isfinite(k)) throw UsageError("--kappa must be positive");
  return Curvature{k};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

void RunConfig::validate() const {
  require_nonnegative(L_list, "--L");
  require_nonnegative(n_list, "--n");
  if (tol && !(*tol > 0.0 && *tol < 1.0)) throw UsageError("--tol must lie in (0, 1)");
  switch (command) {
    case CommandKind::spectrum:
      if (!N_max) throw UsageError("spectrum requires --N-max");
      if (*N_max < 0) throw UsageError("--N-max must be non-negative");
      positive_kappa(*this);
      break;
    case CommandKind::polynomials:
      positive_kappa(*this);
      break;
    case CommandKind::limit:
      if (L_list.size() > 1) throw UsageError("limit takes a single --L value");
      if (k && !(*k > 0.0)) throw UsageError("--k must be positive");
      if (r_max && !(*r_max > 0.0)) throw UsageError("--r-max must be positive");
      break;
    case CommandKind::verify:
      if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw UsageError("unknown verification suite '" + suite + "'");
      }
      if (kappa) positive_kappa(*this);
      break;
  }
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
  const Curvature kappa = positive_kappa(cfg);
  const auto levels = enumerate_levels(*cfg.N_max, kappa);
  report::CsvTable table({"N", "n", "n_r", "L", "type", "energy_over_kappa", "degeneracy_of_N",
                          "energy"});
  json rows = json::array();
  for (const auto& lv : levels) {
    const auto deg = degeneracy(lv.N());
    table.add_row({report::format_number(lv.N()), report::format_number(lv.n()),
                   report::format_number(lv.n_r), report::format_number(lv.L),
                   to_string(lv.type), report::format_number(static_cast<long long>(lv.energy_coeff())),
                   report::format_number(static_cast<long long>(deg)),
                   report::format_number(energy(lv))});
    rows.push_back({{"N", lv.N()},
                    {"n", lv.n()},
                    {"n_r", lv.n_r},
                    {"L", lv.L},
                    {"type", to_string(lv.type)},
                    {"energy_over_kappa", lv.energy_coeff()},
                    {"degeneracy_of_N", deg},
                    {"energy", energy(lv)}});
  }
  if (cfg.format == OutputFormat::csv) return {kExitOk, table.str()};
  return {kExitOk, dump({{"kappa", kappa.value()}, {"levels", rows}})};
}

CommandResult cmd_polynomials(const RunConfig& cfg) {
  const Curvature kappa = positive_kappa(cfg);
  const auto& ns = cfg.n_list.empty() ? kFigureN : cfg.n_list;
  const auto& ls = cfg.L_list.empty() ? kFigureL : cfg.L_list;
  report::CsvTable table({"n", "L", "r", "xi", "q_value", "radial_value"});
  json polys = json::array();
  for (int n : ns) {
    for (int L : ls) {
      const auto q = unified_q(n, L);
      const auto profile = radial_profile(n, L, kappa);
      json rs = json::array(), xis = json::array(), qs = json::array(), rad = json::array();
      for (int i = 0; i < kCurveSamples; ++i) {
        const double r = kappa.antipode() * i / (kCurveSamples - 1);
        const double xi = cos_k(kappa, r);
        const double qv = eval_q(q, xi);
        const double rv = profile(r);
        table.add_row({report::format_number(n), report::format_number(L),
                       report::format_number(r), report::format_number(xi),
                       report::format_number(qv), report::format_number(rv)});
        rs.push_back(r);
        xis.push_back(xi);
        qs.push_back(qv);
        rad.push_back(rv);
      }
      json entry = to_json(q);
      entry["curve"] = {{"r", rs}, {"xi", xis}, {"q_value", qs}, {"radial_value", rad}};
      polys.push_back(std::move(entry));
    }
  }
  if (cfg.format == OutputFormat::csv) return {kExitOk, table.str()};
  return {kExitOk, dump({{"kappa", kappa.value()}, {"polynomials", polys}})};
}

CommandResult cmd_limit(const RunConfig& cfg) {
  LimitSequenceSpec spec;
  spec.L = cfg.L_list.empty() ? 0 : cfg.L_list.front();
  spec.k = cfg.k.value_or(10.0);
  spec.n_values = cfg.n_list.empty() ? kLimitN : cfg.n_list;
  spec.r_max = cfg.r_max.value_or(0.9 * spec.hemisphere_limit());
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  constexpr int grid = 2000;
  const auto rep = convergence_report(spec, grid);
  if (cfg.format == OutputFormat::csv) return {kExitOk, convergence_csv(rep)};

  json rs = json::array(), reference = json::array(), members = json::array();
  const auto bessel = bessel_profile(spec.L, spec.k);
  for (int i = 0; i < grid; ++i) {
    const double r = spec.r_max * static_cast<long double>(i) / (grid - 1);
    rs.push_back(r);
    reference.push_back(bessel(r));
  }
  for (const auto& e : rep.entries) {
    const auto member = contracted_profile(e.n, spec.L, spec.k);
    json values = json::array();
    for (int i = 0; i < grid; ++i) {
      values.push_back(member(spec.r_max * static_cast<long double>(i) / (grid - 1)));
    }
    members.push_back({{"n", e.n},
                       {"kappa_n", e.kappa_n},
                       {"sup_distance", e.sup_distance},
                       {"values", values}});
  }
  return {kExitOk, dump({{"L", spec.L},
                         {"k", spec.k},
                         {"r_max", spec.r_max},
                         {"strictly_decreasing", rep.strictly_decreasing},
                         {"r", rs},
                         {"reference", reference},
                         {"members", members}})};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const Curvature kappa = cfg.kappa ? positive_kappa(cfg) : Curvature{1.0};
  const auto wants = [&](const char* name) { return cfg.suite == "all" || cfg.suite == name; };
  std::vector<Check> checks;
  const auto append = [&](std::vector<Check> more) {
    checks.insert(checks.end(), more.begin(), more.end());
  };
  if (wants("orthogonality")) append(verify_orthogonality(kappa, cfg.tol.value_or(1e-13)));
  if (wants("residuals")) append(verify_residuals(kappa));
  if (wants("shooting")) append(verify_shooting());
  if (wants("hyperbolic")) append(verify_hyperbolic());

  const bool ok = all_passed(checks);
  const int code = ok ? kExitOk : kExitVerificationFailed;
  if (cfg.format == OutputFormat::csv) {
    report::CsvTable table({"name", "achieved", "required", "comparison", "passed"});
    for (const auto& c : checks) {
      const auto j = to_json(c);
      table.add_row({c.name, report::format_number(c.achieved),
                     report::format_number(c.required), j["comparison"].get<std::string>(),
                     c.passed ? "true" : "false"});
    }
    return {code, table.str()};
  }
  json list = json::array();
  for (const auto& c : checks) list.push_back(to_json(c));
  return {code, dump({{"suite", cfg.suite}, {"passed", ok}, {"checks", list}})};
}

CommandResult run(const RunConfig& cfg) {
  try {
    cfg.validate();
    switch (cfg.command) {
      case CommandKind::spectrum: return cmd_spectrum(cfg);
      case CommandKind::polynomials: return cmd_polynomials(cfg);
      case CommandKind::limit: return cmd_limit(cfg);
      case CommandKind::verify: return cmd_verify(cfg);
    }
  } catch (const UsageError& e) {
    return {kExitUsage, std::string("usage error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitUsage, std::string("usage error: ") + e.what() + "\n"};
  }
  return {kExitUsage, "usage error: unhandled command\n"};
}

}  // namespace curvedwave
