#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace binv::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kValidationError = 2, kSolverFailure = 3 };

struct Tolerances {
  /// rel-std / rel-error bound for quantities with a closed form.
  double invariant = 1e-9;
  /// rel-std bound for conjectured invariants (no closed form).
  double conjecture = 1e-6;
  double circle = 1e-6;
  double conic = 1e-6;
};

struct RunConfig {
  double a = 1.5;
  double b = 1.0;
  double rho = 1.0;
  int n = 3;
  int grid = 256;
  int focus = 1;
  /// Boundary parameter of the first vertex for single-orbit commands.
  double t1 = 0.0;
  /// billiard | inversive | center-inversive
  std::string family = "inversive";
  std::vector<int> ids;
  std::filesystem::path out_dir = ".";
  std::set<std::string> formats = {"csv", "json", "svg"};
  Tolerances tols;
  /// Largest N for the tables command.
  int max_n = 12;

  /// Throws ValidationError on any invalid field.
  void validate() const;
  bool wants(const std::string& format) const { return formats.count(format) != 0; }
};

/// Comma-separated integer list, e.g. "1,2,3".
std::vector<int> parse_ids(const std::string& text);

/// Comma-separated subset of {csv, json, svg}.
std::set<std::string> parse_formats(const std::string& text);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads std::getenv.
std::optional<std::string> process_env(const std::string& name);

/// Resolves each tolerance as flag > BINV_TOL_<NAME> environment value > default.
Tolerances resolve_tolerances(const std::optional<double>& invariant,
                              const std::optional<double>& conjecture,
                              const std::optional<double>& circle, const std::optional<double>& conic,
                              const EnvLookup& env = process_env);

}  // namespace binv::cli
