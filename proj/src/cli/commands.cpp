#include <binv/cli/commands.hpp>

#include <binv/billiard_orbits.hpp>
#include <binv/caustics.hpp>
#include <binv/cli/table_fixtures.hpp>
#include <binv/errors.hpp>
#include <binv/invariant_lab.hpp>
#include <binv/locus_lab.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>

namespace binv::cli {

namespace {

// Fixed bounds that are not user tolerances.
constexpr double kOrbitResidualTol = 1e-10;
constexpr double kTangencyTol = 1e-9;
constexpr double kReferenceMatchTol = 1e-7;
constexpr double kAxisTol = 1e-8;
constexpr double kSwanTol = 1e-8;
constexpr double kPowerTol = 1e-9;
constexpr double kTableTol = 1e-3;

std::vector<Point2d> sample_curve(int count, const std::function<Point2d(double)>& f) {
  std::vector<Point2d> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) pts.push_back(f(2.0 * std::numbers::pi * k / count));
  return pts;
}

void finish(CommandResult& res) {
  res.exit_code = std::all_of(res.checks.begin(), res.checks.end(),
                              [](const Check& c) { return c.passed; })
                      ? kOk
                      : kCheckFailure;
}

void emit(CommandResult& res, const RunConfig& cfg, const std::string& file, const std::string& text) {
  const auto path = cfg.out_dir / file;
  write_file(path, text);
  res.files.push_back(path);
}

double rel(double measured, double ref) { return std::abs(measured - ref) / std::abs(ref); }

}  // namespace

CommandResult cmd_orbit(const RunConfig& cfg) {
  const EllipseSpec e = make_ellipse(cfg.a, cfg.b);
  const bool closed_form = cfg.n == 3 && !e.is_circle();
  const Orbit orbit = closed_form ? three_periodic(e, cfg.t1) : solve_nperiodic(e, cfg.n, cfg.t1);
  const double j = joachimsthal(e, orbit);
  const double l = perimeter(orbit.vertices);
  const CausticSpec caustic = closed_form ? confocal_caustic_n3(e) : caustic_from_j(e, j);

  CommandResult res;
  res.checks.push_back(make_check("reflection_residual", orbit.max_residual, kOrbitResidualTol));
  res.checks.push_back(make_check("j_spread", orbit.j_spread(), cfg.tols.invariant));
  if (closed_form) {
    const JoachimsthalPerimeter ref = n3_closed_form_jl(e);
    res.checks.push_back(make_check("J_closed_form", rel(j, ref.j), cfg.tols.invariant));
    res.checks.push_back(make_check("L_closed_form", rel(l, ref.l), cfg.tols.invariant));
  }
  double tangency = 0.0;
  for (int i = 0; i < orbit.n; ++i) {
    const Point2d& p = orbit.vertices[i];
    const Point2d& q = orbit.vertices[(i + 1) % orbit.n];
    tangency = std::max(tangency, std::abs(tangency_residual(Line2{p, q - p}, caustic)));
  }
  res.checks.push_back(make_check("caustic_tangency", tangency, kTangencyTol));
  if (caustic.a2 < e.a) {
    res.checks.push_back(make_check("stachel_j", rel(stachel_j(e, caustic.a2), j), kTangencyTol));
  }

  if (cfg.wants("csv")) {
    CsvWriter csv({"i", "t", "x", "y", "j"});
    for (int i = 0; i < orbit.n; ++i) {
      csv.row({std::to_string(i + 1), fmt(orbit.params[i]), fmt(orbit.vertices[i].x()),
               fmt(orbit.vertices[i].y()), fmt(orbit.j_values[i])});
    }
    emit(res, cfg, "orbit.csv", csv.str());
  }
  if (cfg.wants("json")) {
    Json r;
    r["n"] = orbit.n;
    r["t1"] = cfg.t1;
    r["J"] = j;
    r["L"] = l;
    r["JL"] = j * l;
    r["caustic"] = {{"a2", caustic.a2}, {"b2", caustic.b2}};
    r["max_residual"] = orbit.max_residual;
    Json verts = Json::array();
    for (int i = 0; i < orbit.n; ++i) {
      verts.push_back({{"t", orbit.params[i]},
                       {"x", orbit.vertices[i].x()},
                       {"y", orbit.vertices[i].y()},
                       {"j", orbit.j_values[i]}});
    }
    r["vertices"] = verts;
    emit(res, cfg, "orbit.json", json_report(config_json(cfg, "orbit"), Json::array({r}), res.checks));
  }
  if (cfg.wants("svg")) {
    const auto billiard = sample_curve(256, [&](double t) { return ellipse_point(e, t); });
    const auto caus = sample_curve(256, [&](double t) {
      return Point2d(caustic.a2 * std::cos(t), caustic.b2 * std::sin(t));
    });
    const auto [lo, hi] = bounds({&billiard});
    SvgPlot svg(lo, hi);
    svg.polyline(billiard, "#222", true);
    svg.polyline(caus, "#8b5a2b", true, 1.0, "4 3");
    svg.polyline(orbit.vertices, "#1f5fbf", true);
    svg.dots({focus(e, 1), focus(e, 2)}, "#000", 2.5);
    svg.dots(orbit.vertices, "#1f5fbf", 3.0);
    emit(res, cfg, "orbit.svg", svg.str());
  }
  res.notes.push_back("J=" + fmt(j) + " L=" + fmt(l));
  finish(res);
  return res;
}

CommandResult cmd_invariants(const RunConfig& cfg) {
  const EllipseSpec e = make_ellipse(cfg.a, cfg.b);
  const InversiveConfig icfg{cfg.focus, cfg.rho};
  const auto traces = sweep_family(e, icfg, cfg.n, cfg.grid);
  const bool tri = cfg.n == 3;

  CommandResult res;
  std::map<std::string, std::string> status;
  for (const auto& tr : traces) {
    if (!tri) {
      if (tr.name == "L_dagger") {
        res.checks.push_back(make_check("L_dagger.rel_std", tr.rel_std(), cfg.tols.conjecture,
                                        "conjecture: no closed form"));
        status[tr.name] = "conjecture: no closed form";
      } else {
        status[tr.name] = "recorded only";
      }
      continue;
    }
    status[tr.name] = "closed form";
    if (*tr.closed_form == 0.0) {
      // Zero-valued references compare absolutely, in units of a or a².
      const double unit = tr.name == "pedal_area_gap" ? e.a * e.a : e.a;
      const double dev = std::max(std::abs(tr.mean), tr.max_abs_dev) / unit;
      res.checks.push_back(make_check(tr.name + ".abs", dev, cfg.tols.invariant));
      continue;
    }
    res.checks.push_back(make_check(tr.name + ".rel_std", tr.rel_std(), cfg.tols.invariant));
    res.checks.push_back(make_check(tr.name + ".rel_error", *tr.rel_error(), cfg.tols.invariant,
                                    tr.mirrored ? "matched after x -> -x" : ""));
  }

  Json extra = Json::object();
  if (tri) {
    const RotatingBilliardReport rb = verify_rotating_billiard(e, cfg.rho, cfg.grid);
    const double center_err =
        (rb.center_fit.center - rb.center_ref).norm() / std::max(rb.center_ref.norm(), e.a);
    res.checks.push_back(make_check("circumbilliard.vertex_j_spread", rb.max_vertex_spread,
                                    cfg.tols.invariant));
    res.checks.push_back(
        make_check("circumbilliard.sweep_j_spread", rb.sweep_spread, cfg.tols.invariant));
    res.checks.push_back(make_check("circumbilliard.center_circle_radius",
                                    rel(rb.center_fit.radius, rb.radius_ref), cfg.tols.invariant));
    res.checks.push_back(make_check("circumbilliard.center_circle_center", center_err,
                                    cfg.tols.invariant,
                                    rb.center_mirrored ? "matched after x -> -x" : ""));
    extra = {{"circumbilliard_j", rb.j_mean},
             {"vertex_j_spread", rb.max_vertex_spread},
             {"sweep_j_spread", rb.sweep_spread},
             {"center_circle", {{"cx", rb.center_fit.center.x()},
                                {"cy", rb.center_fit.center.y()},
                                {"r", rb.center_fit.radius},
                                {"ref_cx", rb.center_ref.x()},
                                {"ref_r", rb.radius_ref},
                                {"mirrored", rb.center_mirrored}}}};
  }

  if (cfg.wants("csv")) {
    CsvWriter table({"name", "mean", "std", "rel_std", "max_abs_dev", "closed_form", "rel_error",
                     "mirrored", "status"});
    for (const auto& tr : traces) {
      table.row({tr.name, fmt(tr.mean), fmt(tr.std), fmt(tr.rel_std()), fmt(tr.max_abs_dev),
                 tr.closed_form ? fmt(*tr.closed_form) : "", tr.rel_error() ? fmt(*tr.rel_error()) : "",
                 tr.mirrored ? "1" : "0", status[tr.name]});
    }
    emit(res, cfg, "invariants.csv", table.str());

    std::vector<std::string> header{"t1"};
    for (const auto& tr : traces) header.push_back(tr.name);
    CsvWriter samples(header);
    for (std::size_t k = 0; k < traces.front().t1.size(); ++k) {
      std::vector<std::string> row{fmt(traces.front().t1[k])};
      for (const auto& tr : traces) row.push_back(fmt(tr.values[k]));
      samples.row(row);
    }
    emit(res, cfg, "invariant_traces.csv", samples.str());
  }
  if (cfg.wants("json")) {
    Json rows = Json::array();
    for (const auto& tr : traces) {
      Json r;
      r["name"] = tr.name;
      r["mean"] = tr.mean;
      r["std"] = tr.std;
      r["rel_std"] = tr.rel_std();
      r["max_abs_dev"] = tr.max_abs_dev;
      r["closed_form"] = tr.closed_form ? Json(*tr.closed_form) : Json(nullptr);
      r["rel_error"] = tr.rel_error() ? Json(*tr.rel_error()) : Json(nullptr);
      r["mirrored"] = tr.mirrored;
      r["status"] = status[tr.name];
      rows.push_back(std::move(r));
    }
    if (!extra.empty()) rows.push_back({{"name", "rotating_circumbilliard"}, {"report", extra}});
    emit(res, cfg, "invariants.json", json_report(config_json(cfg, "invariants"), rows, res.checks));
  }
  if (cfg.wants("svg")) {
    const Orbit orbit = family_orbit(e, cfg.n, cfg.t1);
    const InversivePolygon inv = focus_inversive(e, orbit, icfg);
    const auto billiard = sample_curve(256, [&](double t) { return ellipse_point(e, t); });
    const auto limacon =
        sample_curve(256, [&](double t) { return limacon_point(e, cfg.rho, t, cfg.focus); });
    const auto [lo, hi] = bounds({&billiard, &limacon});
    SvgPlot svg(lo, hi);
    svg.polyline(billiard, "#222", true);
    svg.polyline(limacon, "#c8509b", true, 1.0, "4 3");
    svg.polyline(orbit.vertices, "#1f5fbf", true);
    svg.polyline(inv.vertices, "#c8509b", true);
    svg.dots({inv.focus}, "#000", 2.5);
    emit(res, cfg, "invariants.svg", svg.str());
  }
  finish(res);
  return res;
}

namespace {

std::vector<int> default_ids(Family family) {
  std::vector<int> ids;
  switch (family) {
    case Family::focus_inversive:
      ids = theorem_circle_ids();
      ids.insert(ids.end(), {88, 150, 162, 934});
      break;
    case Family::billiard: ids = {9, 88, 100, 162}; break;
    case Family::center_inversive: ids = {3}; break;
  }
  return ids;
}

bool contains(const std::vector<int>& v, int id) { return std::find(v.begin(), v.end(), id) != v.end(); }

}  // namespace

CommandResult cmd_loci(const RunConfig& cfg) {
  const EllipseSpec e = make_ellipse(cfg.a, cfg.b);
  const InversiveConfig icfg{cfg.focus, cfg.rho};
  const Family family = parse_family(cfg.family);
  const LocusTolerances tols{1e-9, cfg.tols.circle, cfg.tols.conic, 1e-3};

  CommandResult res;
  std::vector<int> ids = cfg.ids;
  if (ids.empty()) {
    for (int id : default_ids(family)) {
      if (is_supported_center(id)) {
        ids.push_back(id);
      } else {
        res.notes.push_back("X(" + std::to_string(id) + "): unsupported (no trilinear entry)");
      }
    }
  } else {
    for (int id : ids) {
      if (!is_supported_center(id)) {
        throw ValidationError("unsupported triangle center X(" + std::to_string(id) +
                              "); supported: " + supported_centers_text());
      }
    }
  }

  struct Row {
    LocusSample sample;
    LocusClass cls;
    std::optional<CircleMatch> match;
    double level_error = NAN;
  };
  std::vector<Row> rows;
  std::optional<CircleFit> x100_circle;
  for (int id : ids) {
    Row row{sweep_locus(e, icfg, id, family, cfg.grid), {}, std::nullopt, NAN};
    row.cls = classify_locus(row.sample, tols);
    const std::string tag = "X" + std::to_string(id) + "." + std::string(family_name(family));
    if (family == Family::focus_inversive) {
      if (contains(theorem_circle_ids(), id) || id == 150 || id == 934) {
        res.checks.push_back(make_flag_check(tag + ".circle", row.cls.verdict == Verdict::circle,
                                             std::string(verdict_name(row.cls.verdict))));
        if (row.cls.circle) {
          res.checks.push_back(
              make_check(tag + ".center_on_axis", std::abs(row.cls.circle->center.y()) / e.a, kAxisTol));
        }
      }
      if (id == 88 || id == 162) {
        res.checks.push_back(make_flag_check(tag + ".non_conic", row.cls.verdict == Verdict::non_conic,
                                             std::string(verdict_name(row.cls.verdict))));
      }
      if (has_circle_reference(id) && row.cls.circle) {
        row.match = match_circle(*row.cls.circle, circle_locus_reference(e, cfg.rho, id), e.a);
        const std::string note = row.match->mirrored ? "matched after x -> -x" : "";
        res.checks.push_back(make_check(tag + ".center_vs_closed_form", row.match->center_rel_error,
                                        kReferenceMatchTol, note));
        res.checks.push_back(make_check(tag + ".radius_vs_closed_form", row.match->radius_rel_error,
                                        kReferenceMatchTol, note));
      }
      if (id == 100 && row.cls.circle) x100_circle = row.cls.circle;
    } else if (family == Family::billiard) {
      row.level_error = 0.0;
      for (const auto& p : row.sample.points) {
        row.level_error = std::max(row.level_error, std::abs(ellipse_level(e, p) - 1.0));
      }
      if (id == 9) {
        res.checks.push_back(make_flag_check(tag + ".stationary", row.cls.verdict == Verdict::point,
                                             std::string(verdict_name(row.cls.verdict))));
      }
      if (id == 88 || id == 100 || id == 162) {
        res.checks.push_back(make_check(tag + ".on_billiard", row.level_error, kSwanTol));
      }
    } else if (id == 3) {
      res.checks.push_back(make_flag_check(tag + ".ellipse", row.cls.verdict == Verdict::ellipse,
                                           std::string(verdict_name(row.cls.verdict))));
      const CenterInversiveX3Report x3 = center_inversive_x3_check(e, cfg.rho, cfg.grid);
      res.checks.push_back(make_check(tag + ".ratio_x", rel(x3.ratio_x, x3.expected_ratio), kReferenceMatchTol));
      res.checks.push_back(make_check(tag + ".ratio_y", rel(x3.ratio_y, x3.expected_ratio), kReferenceMatchTol));
      res.checks.push_back(
          make_check(tag + ".aspect_product", std::abs(x3.aspect_product - 1.0), kReferenceMatchTol));
      res.checks.push_back(make_check(tag + ".power", x3.max_power_error, kPowerTol));
      res.checks.push_back(make_check(tag + ".concentric", x3.center_offset / e.a, kAxisTol));
      res.checks.push_back(make_check(tag + ".axis_aligned", x3.axis_tilt, kAxisTol));
      res.notes.push_back("X(3) center-inversive semiaxis ratio " + fmt(x3.ratio_x) +
                          " (expected rho^2/delta = " + fmt(x3.expected_ratio) + ")");
    }
    rows.push_back(std::move(row));
  }
  if (family == Family::focus_inversive && contains(ids, 934)) {
    if (!x100_circle) {
      x100_circle = classify_locus(sweep_locus(e, icfg, 100, family, cfg.grid), tols).circle;
    }
    for (const Row& r : rows) {
      if (r.sample.center_id != 934 || !r.cls.circle || !x100_circle) continue;
      const double dc = (r.cls.circle->center - x100_circle->center).norm() / e.a;
      const double dr = rel(r.cls.circle->radius, x100_circle->radius);
      res.checks.push_back(
          make_check("X934.focus-inversive.equals_X100_circle", std::max(dc, dr), kReferenceMatchTol));
    }
  }

  if (cfg.wants("csv")) {
    CsvWriter table({"id", "family", "verdict", "diameter", "circle_cx", "circle_cy", "circle_r",
                     "circle_rel_rms", "conic_type", "conic_rel_rms", "in_gap", "ref_cx", "ref_r",
                     "mirrored", "center_rel_error", "radius_rel_error", "level_error"});
    CsvWriter points({"id", "family", "t1", "x", "y"});
    for (const Row& r : rows) {
      const auto& c = r.cls.circle;
      const auto& q = r.cls.conic;
      table.row({std::to_string(r.sample.center_id), std::string(family_name(family)),
                 std::string(verdict_name(r.cls.verdict)), fmt(r.cls.diameter),
                 c ? fmt(c->center.x()) : "", c ? fmt(c->center.y()) : "", c ? fmt(c->radius) : "",
                 c ? fmt(r.cls.circle_rel_rms) : "", q ? std::string(conic_type_name(q->type)) : "",
                 q ? fmt(r.cls.conic_rel_rms) : "", r.cls.in_gap ? "1" : "0",
                 r.match ? fmt(r.match->reference_center.x()) : "",
                 r.match ? fmt(r.match->reference_radius) : "",
                 r.match ? (r.match->mirrored ? "1" : "0") : "",
                 r.match ? fmt(r.match->center_rel_error) : "",
                 r.match ? fmt(r.match->radius_rel_error) : "",
                 std::isnan(r.level_error) ? "" : fmt(r.level_error)});
      for (std::size_t k = 0; k < r.sample.points.size(); ++k) {
        points.row({std::to_string(r.sample.center_id), std::string(family_name(family)),
                    fmt(r.sample.t1[k]), fmt(r.sample.points[k].x()), fmt(r.sample.points[k].y())});
      }
    }
    emit(res, cfg, "loci.csv", table.str());
    emit(res, cfg, "loci_points.csv", points.str());
  }
  if (cfg.wants("json")) {
    Json out = Json::array();
    for (const Row& r : rows) {
      Json j;
      j["id"] = r.sample.center_id;
      j["family"] = family_name(family);
      j["verdict"] = verdict_name(r.cls.verdict);
      j["diameter"] = r.cls.diameter;
      if (r.cls.circle) {
        j["circle"] = {{"cx", r.cls.circle->center.x()},
                       {"cy", r.cls.circle->center.y()},
                       {"r", r.cls.circle->radius},
                       {"rel_rms", r.cls.circle_rel_rms}};
      }
      if (r.cls.conic) {
        j["conic"] = {{"type", conic_type_name(r.cls.conic->type)},
                      {"rel_rms", r.cls.conic_rel_rms},
                      {"semi_major", r.cls.conic->semi_major},
                      {"semi_minor", r.cls.conic->semi_minor}};
      }
      j["in_gap"] = r.cls.in_gap;
      if (r.match) {
        j["closed_form"] = {{"cx", r.match->reference_center.x()},
                            {"r", r.match->reference_radius},
                            {"mirrored", r.match->mirrored},
                            {"center_rel_error", r.match->center_rel_error},
                            {"radius_rel_error", r.match->radius_rel_error}};
      }
      if (!std::isnan(r.level_error)) j["level_error"] = r.level_error;
      out.push_back(std::move(j));
    }
    Json cfg_json = config_json(cfg, "loci");
    cfg_json["notes"] = res.notes;
    emit(res, cfg, "loci.json", json_report(cfg_json, out, res.checks));
  }
  if (cfg.wants("svg")) {
    const auto billiard = sample_curve(256, [&](double t) { return ellipse_point(e, t); });
    std::vector<Point2d> curve;
    if (family == Family::focus_inversive) {
      curve = sample_curve(256, [&](double t) { return limacon_point(e, cfg.rho, t, cfg.focus); });
    } else if (family == Family::center_inversive) {
      curve = sample_curve(256, [&](double t) { return booth_point(e, cfg.rho, t); });
    }
    std::vector<const std::vector<Point2d>*> sets{&billiard, &curve};
    for (const Row& r : rows) sets.push_back(&r.sample.points);
    const auto [lo, hi] = bounds(sets);
    SvgPlot svg(lo, hi);
    svg.polyline(billiard, "#222", true);
    if (!curve.empty()) svg.polyline(curve, "#c8509b", true, 1.0, "4 3");
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& pts = rows[i].sample.points;
      const std::string color = palette[i % 10];
      if (rows[i].cls.verdict == Verdict::point) {
        svg.dots({pts.front()}, color, 3.0);
      } else {
        svg.polyline(pts, color, true, 1.2);
      }
      svg.label(pts.front(), "X" + std::to_string(rows[i].sample.center_id), color);
    }
    emit(res, cfg, "loci.svg", svg.str());
  }
  finish(res);
  return res;
}

CommandResult cmd_tables(const RunConfig& cfg) {
  CommandResult res;
  CsvWriter diff({"a_over_b", "N", "J", "L", "JL", "J_ref", "L_ref", "JL_ref", "dJ", "dL", "dJL"});
  std::vector<std::string> layout_header{"a_over_b", "quantity"};
  for (int n = 3; n <= cfg.max_n; ++n) layout_header.push_back("N=" + std::to_string(n));
  CsvWriter layout(layout_header);
  Json rows = Json::array();

  for (const TableFixture& fx : kTableFixtures) {
    const EllipseSpec e = make_ellipse(fx.ratio, 1.0);
    std::vector<std::string> jrow{fmt(fx.ratio), "J"}, lrow{fmt(fx.ratio), "L"}, jlrow{fmt(fx.ratio), "JL"};
    for (int n = 3; n <= cfg.max_n; ++n) {
      const Orbit orbit = family_orbit(e, n, 0.0);
      const double j = joachimsthal(e, orbit);
      const double l = perimeter(orbit.vertices);
      jrow.push_back(fmt(j));
      lrow.push_back(fmt(l));
      jlrow.push_back(fmt(j * l));
      Json r = {{"a_over_b", fx.ratio}, {"N", n}, {"J", j}, {"L", l}, {"JL", j * l}};
      if (n <= 12) {
        const std::size_t k = static_cast<std::size_t>(n - 3);
        const double dj = j - fx.j[k], dl = l - fx.l[k], djl = j * l - fx.jl[k];
        diff.row({fmt(fx.ratio), std::to_string(n), fmt(j), fmt(l), fmt(j * l), fmt(fx.j[k]),
                  fmt(fx.l[k]), fmt(fx.jl[k]), fmt(dj), fmt(dl), fmt(djl)});
        const std::string cell = "a/b=" + fmt(fx.ratio) + " N=" + std::to_string(n);
        // Published cells are rounded to 3 decimals; allow for float noise at the boundary.
        res.checks.push_back(make_check("J " + cell, std::abs(dj), kTableTol + 1e-12));
        res.checks.push_back(make_check("L " + cell, std::abs(dl), kTableTol + 1e-12));
        res.checks.push_back(make_check("JL " + cell, std::abs(djl), kTableTol + 1e-12));
        r["J_ref"] = fx.j[k];
        r["L_ref"] = fx.l[k];
        r["JL_ref"] = fx.jl[k];
      }
      rows.push_back(std::move(r));
    }
    layout.row(jrow);
    layout.row(lrow);
    layout.row(jlrow);
  }
  if (cfg.wants("csv")) {
    emit(res, cfg, "tables.csv", layout.str());
    emit(res, cfg, "tables_diff.csv", diff.str());
  }
  if (cfg.wants("json")) {
    emit(res, cfg, "tables.json", json_report(config_json(cfg, "tables"), rows, res.checks));
  }
  finish(res);
  return res;
}

int run_command(const std::string& name, const Command& command, const RunConfig& cfg,
                std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
  } catch (const ValidationError& ex) {
    err << "binv " << name << ": validation error: " << ex.what() << "\n";
    return kValidationError;
  }
  try {
    const CommandResult res = command(cfg);
    std::size_t failed = 0;
    for (const auto& c : res.checks) {
      if (!c.passed) {
        ++failed;
        err << "FAIL " << c.name << ": " << fmt(c.value) << " >= " << fmt(c.tolerance);
        if (!c.detail.empty()) err << " (" << c.detail << ")";
        err << "\n";
      }
    }
    for (const auto& note : res.notes) out << "note: " << note << "\n";
    for (const auto& f : res.files) out << "wrote " << f.string() << "\n";
    out << name << ": " << (res.checks.size() - failed) << "/" << res.checks.size()
        << " checks passed\n";
    return res.exit_code;
  } catch (const ValidationError& ex) {
    err << "binv " << name << ": validation error: " << ex.what() << "\n";
    return kValidationError;
  } catch (const SolverError& ex) {
    err << "binv " << name << ": solver failure: " << ex.what() << "\n";
    return kSolverFailure;
  } catch (const std::domain_error& ex) {
    err << "binv " << name << ": geometry failure: " << ex.what() << "\n";
    return kSolverFailure;
  } catch (const std::exception& ex) {
    err << "binv " << name << ": error: " << ex.what() << "\n";
    return kSolverFailure;
  }
}

}  // namespace binv::cli
