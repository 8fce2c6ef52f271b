#pragma once

// Command layer behind the CLI. Each command turns a RunConfig into a payload
// string and an exit status; nothing here touches the filesystem.

#include <optional>
#include <string>
#include <vector>

namespace curvedwave {

enum class CommandKind { spectrum, polynomials, limit, verify };
enum class OutputFormat { csv, json };

CommandKind command_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);

struct RunConfig {
  CommandKind command = CommandKind::spectrum;
  std::optional<double> kappa;
  std::vector<int> L_list;
  std::vector<int> n_list;
  std::optional<double> k;
  std::optional<int> N_max;
  std::optional<double> r_max;
  std::optional<double> tol;
  std::string suite = "all";
  std::string output_path;
  OutputFormat format = OutputFormat::csv;

  /// Throws UsageError when the command lacks a parameter it needs or gets
  /// one outside its domain.
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string payload;
};

/// Levels with N <= N_max: N,n,n_r,L,type,energy_over_kappa,degeneracy_of_N,energy.
CommandResult cmd_spectrum(const RunConfig& cfg);
/// Coefficients (JSON) and curves sin^L Q(cos r) over r in [0, pi] at k = 1.
CommandResult cmd_polynomials(const RunConfig& cfg);
/// Euclidean-limit sequence: distance table (CSV) or curves + distances (JSON).
CommandResult cmd_limit(const RunConfig& cfg);
/// Runs a verification suite; exit 1 iff a check fails.
CommandResult cmd_verify(const RunConfig& cfg);

/// Validates and dispatches. UsageError and DomainError become exit 2.
CommandResult run(const RunConfig& cfg);

inline constexpr int kCurveSamples = 201;

}  // namespace curvedwave
