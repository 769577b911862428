#pragma once

#include <binv/cli/run_config.hpp>
#include <binv/cli/writers.hpp>

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace binv::cli {

struct CommandResult {
  int exit_code = kOk;
  std::vector<std::filesystem::path> files;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

/// Orbit vertices, J, L and caustic for one (a, b, n, t1).
CommandResult cmd_orbit(const RunConfig& cfg);
/// Invariant traces over the focus-inversive family with closed-form comparison.
CommandResult cmd_invariants(const RunConfig& cfg);
/// Center loci, fits and verdicts for the requested ids and family.
CommandResult cmd_loci(const RunConfig& cfg);
/// J/L grid for the reference aspect ratios, diffed against the embedded table.
CommandResult cmd_tables(const RunConfig& cfg);

using Command = std::function<CommandResult(const RunConfig&)>;

/// Validates cfg, runs the command, prints a summary to `out` and errors to
/// `err`, and maps exceptions to exit codes (validation 2, solver 3).
int run_command(const std::string& name, const Command& command, const RunConfig& cfg,
                std::ostream& out, std::ostream& err);

}  // namespace binv::cli
