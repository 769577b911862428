// binv: elliptic-billiard orbits, inversive families, invariants and loci.

#include <binv/cli/commands.hpp>
#include <binv/errors.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

struct Flags {
  binv::cli::RunConfig cfg;
  std::string ids;
  std::string formats = "csv,json,svg";
  std::string out_dir = ".";
  std::optional<double> tol_invariant, tol_conjecture, tol_circle, tol_conic;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--a", f.cfg.a, "Major semiaxis")->capture_default_str();
  sub->add_option("--b", f.cfg.b, "Minor semiaxis")->capture_default_str();
  sub->add_option("--rho", f.cfg.rho, "Inversion radius")->capture_default_str();
  sub->add_option("--n", f.cfg.n, "Orbit vertex count N")->capture_default_str();
  sub->add_option("--grid", f.cfg.grid, "Family samples over t1 (>= 16)")->capture_default_str();
  sub->add_option("--focus", f.cfg.focus, "Inversion focus: 1 = (-c,0), 2 = (+c,0)")->capture_default_str();
  sub->add_option("--t1", f.cfg.t1, "First-vertex parameter for single orbits")->capture_default_str();
  sub->add_option("--out", f.out_dir, "Output directory")->capture_default_str();
  sub->add_option("--formats", f.formats, "Subset of csv,json,svg")->capture_default_str();
  sub->add_option("--tol-invariant", f.tol_invariant, "Relative bound for closed-form invariants");
  sub->add_option("--tol-conjecture", f.tol_conjecture, "Relative-std bound for conjectured invariants");
  sub->add_option("--tol-circle", f.tol_circle, "Circle verdict bound (rms / radius)");
  sub->add_option("--tol-conic", f.tol_conic, "Ellipse verdict bound (rms / diameter)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace binv::cli;
  CLI::App app{"Elliptic-billiard N-periodics, focus-inversive families and their invariants"};
  app.require_subcommand(1);

  Flags f;
  CLI::App* orbit = app.add_subcommand("orbit", "Solve one N-periodic: vertices, J, L, caustic");
  CLI::App* invariants = app.add_subcommand("invariants", "Sweep the inversive family and compare invariants");
  CLI::App* loci = app.add_subcommand("loci", "Triangle-center loci, fits and verdicts");
  CLI::App* tables = app.add_subcommand("tables", "Regenerate the J/L grid and diff it against the fixtures");
  for (CLI::App* sub : {orbit, invariants, loci, tables}) add_common(sub, f);
  loci->add_option("--ids", f.ids, "Comma-separated Kimberling indices");
  loci->add_option("--family", f.cfg.family, "billiard | inversive | center-inversive")->capture_default_str();
  tables->add_option("--max-n", f.cfg.max_n, "Largest N in the grid")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    f.cfg.out_dir = f.out_dir;
    f.cfg.formats = parse_formats(f.formats);
    if (!f.ids.empty()) f.cfg.ids = parse_ids(f.ids);
    f.cfg.tols = resolve_tolerances(f.tol_invariant, f.tol_conjecture, f.tol_circle, f.tol_conic);
  } catch (const binv::ValidationError& e) {
    std::cerr << "binv: validation error: " << e.what() << "\n";
    return kValidationError;
  }

  if (orbit->parsed()) return run_command("orbit", cmd_orbit, f.cfg, std::cout, std::cerr);
  if (invariants->parsed()) return run_command("invariants", cmd_invariants, f.cfg, std::cout, std::cerr);
  if (loci->parsed()) return run_command("loci", cmd_loci, f.cfg, std::cout, std::cerr);
  return run_command("tables", cmd_tables, f.cfg, std::cout, std::cerr);
}
