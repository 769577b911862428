#include <binv/cli/run_config.hpp>

#include <binv/errors.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace binv::cli {

namespace {

double parse_positive(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(name + " must be a positive number, got '" + text + "'");
  }
  return v;
}

void require_tol(const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("tolerance ") + name + " must be positive");
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!(b > 0.0) || !std::isfinite(b) || !std::isfinite(a)) {
    throw ValidationError("semiaxes must be finite and positive");
  }
  if (a < b) throw ValidationError("a must be >= b (orient the billiard with the major axis on x)");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ValidationError("rho must be finite and positive");
  if (n < 3) throw ValidationError("n must be at least 3");
  if (grid < 16) throw ValidationError("grid must be at least 16");
  if (!std::isfinite(t1)) throw ValidationError("t1 must be finite");
  if (focus != 1 && focus != 2) throw ValidationError("focus must be 1 or 2");
  if (family != "billiard" && family != "inversive" && family != "focus-inversive" &&
      family != "center-inversive") {
    throw ValidationError("family must be billiard, inversive or center-inversive");
  }
  if (max_n < 3) throw ValidationError("max-n must be at least 3");
  for (const auto& f : formats) {
    if (f != "csv" && f != "json" && f != "svg") throw ValidationError("unknown format '" + f + "'");
  }
  require_tol("invariant", tols.invariant);
  require_tol("conjecture", tols.conjecture);
  require_tol("circle", tols.circle);
  require_tol("conic", tols.conic);
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v <= 0) throw ValidationError("bad center id '" + item + "'");
    ids.push_back(v);
  }
  return ids;
}

std::set<std::string> parse_formats(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item != "csv" && item != "json" && item != "svg") {
      throw ValidationError("unknown format '" + item + "' (expected csv, json, svg)");
    }
    out.insert(item);
  }
  if (out.empty()) throw ValidationError("at least one output format is required");
  return out;
}

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

Tolerances resolve_tolerances(const std::optional<double>& invariant,
                              const std::optional<double>& conjecture,
                              const std::optional<double>& circle, const std::optional<double>& conic,
                              const EnvLookup& env) {
  Tolerances t;
  auto pick = [&](const std::optional<double>& flag, const std::string& var, double& slot) {
    if (flag) {
      if (!(*flag > 0.0) || !std::isfinite(*flag)) {
        throw ValidationError("tolerance flag for " + var + " must be finite and positive");
      }
      slot = *flag;
    } else if (auto v = env(var)) {
      slot = parse_positive(var, *v);
    }
  };
  pick(invariant, "BINV_TOL_INVARIANT", t.invariant);
  pick(conjecture, "BINV_TOL_CONJECTURE", t.conjecture);
  pick(circle, "BINV_TOL_CIRCLE", t.circle);
  pick(conic, "BINV_TOL_CONIC", t.conic);
  return t;
}

}  // namespace binv::cli
