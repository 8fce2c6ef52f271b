// curvedwave: spectrum tables, polynomial curves, Euclidean-limit datasets and
// verification reports for the free particle on constant-curvature 3-spaces.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvedwave/commands.hpp"
#include "curvedwave/errors.hpp"

namespace {

template <typename T>
void copy_if_set(const CLI::Option* opt, const T& value, std::optional<T>& target) {
  if (opt->count() > 0) target = value;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace curvedwave;

  CLI::App app{"Free quantum particle on spaces of constant curvature"};
  app.set_help_flag("-h,--help", "Show help");

  std::string command, format = "csv", suite = "all";
  double kappa = 1.0, k = 10.0, r_max = 1.0, tol = 1e-13;
  int n_max = 0;
  RunConfig cfg;

  app.add_option("command", command, "spectrum | polynomials | limit | verify")->required();
  app.add_option("suite", suite, "verify suite: orthogonality | residuals | shooting | hyperbolic | all");
  auto* kappa_opt = app.add_option("--kappa", kappa, "Curvature");
  app.add_option("--L", cfg.L_list, "Angular momenta, comma separated")->delimiter(',');
  app.add_option("--n", cfg.n_list, "Polynomial degrees, comma separated")->delimiter(',');
  auto* k_opt = app.add_option("--k", k, "Euclidean wave number");
  auto* nmax_opt = app.add_option("--N-max", n_max, "Largest principal number N");
  auto* rmax_opt = app.add_option("--r-max", r_max, "Upper end of the limit grid");
  app.add_option("--out", cfg.output_path, "Write the payload here instead of stdout");
  app.add_option("--format", format, "csv | json");
  auto* tol_opt = app.add_option("--tol", tol, "Quadrature relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.command = command_from_string(command);
    cfg.format = format_from_string(format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  copy_if_set(kappa_opt, kappa, cfg.kappa);
  copy_if_set(k_opt, k, cfg.k);
  copy_if_set(nmax_opt, n_max, cfg.N_max);
  copy_if_set(rmax_opt, r_max, cfg.r_max);
  copy_if_set(tol_opt, tol, cfg.tol);
  cfg.suite = suite;

  const CommandResult result = run(cfg);
  if (result.exit_code == kExitUsage) {
    std::cerr << result.payload;
    return result.exit_code;
  }
  if (cfg.output_path.empty()) {
    std::cout << result.payload;
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << cfg.output_path << "\n";
      return kExitUsage;
    }
    out << result.payload;
  }
  return result.exit_code;
}
