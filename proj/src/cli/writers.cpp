#include <binv/cli/writers.hpp>

#include <binv/errors.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace binv::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::logic_error("CSV row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      text_ += '"';
      for (char c : cells[i]) text_ += (c == '"') ? std::string("\"\"") : std::string(1, c);
      text_ += '"';
    } else {
      text_ += cells[i];
    }
  }
  text_ += '\n';
}

std::string CsvWriter::str() const { return text_; }

Check make_check(std::string name, double value, double tolerance, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.tolerance = tolerance;
  c.passed = value < tolerance;
  c.detail = std::move(detail);
  return c;
}

Check make_flag_check(std::string name, bool passed, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.value = passed ? 0.0 : 1.0;
  c.tolerance = 0.5;
  c.passed = passed;
  c.detail = std::move(detail);
  return c;
}

Json config_json(const RunConfig& cfg, const std::string& command) {
  Json j;
  j["command"] = command;
  j["a"] = cfg.a;
  j["b"] = cfg.b;
  j["rho"] = cfg.rho;
  j["n"] = cfg.n;
  j["grid"] = cfg.grid;
  j["focus"] = cfg.focus;
  j["family"] = cfg.family;
  j["ids"] = cfg.ids;
  j["max_n"] = cfg.max_n;
  j["tolerances"] = {{"invariant", cfg.tols.invariant},
                     {"conjecture", cfg.tols.conjecture},
                     {"circle", cfg.tols.circle},
                     {"conic", cfg.tols.conic}};
  return j;
}

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["value"] = std::isfinite(c.value) ? Json(c.value) : Json(fmt(c.value));
    j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string json_report(const Json& config, const Json& results, const std::vector<Check>& checks) {
  Json root;
  root["config"] = config;
  root["results"] = results;
  root["checks"] = checks_json(checks);
  return root.dump(2) + "\n";
}

SvgPlot::SvgPlot(Point2d world_min, Point2d world_max) {
  const Point2d span = (world_max - world_min).cwiseMax(Point2d::Constant(1e-12));
  scale_ = std::min((kWidth - 2 * kMargin) / span.x(), (kHeight - 2 * kMargin) / span.y());
  const Point2d mid = 0.5 * (world_min + world_max);
  origin_ = mid;
}

Point2d SvgPlot::to_px(const Point2d& p) const {
  return {kWidth / 2 + scale_ * (p.x() - origin_.x()), kHeight / 2 - scale_ * (p.y() - origin_.y())};
}

void SvgPlot::polyline(const std::vector<Point2d>& pts, const std::string& stroke, bool closed,
                       double width, const std::string& dash) {
  if (pts.empty()) return;
  body_ += closed ? "  <polygon points=\"" : "  <polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2d q = to_px(pts[i]);
    if (i) body_ += ' ';
    body_ += px(q.x()) + "," + px(q.y());
  }
  body_ += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + px(width) + "\"";
  if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
  body_ += "/>\n";
}

void SvgPlot::dots(const std::vector<Point2d>& pts, const std::string& fill, double radius) {
  for (const auto& p : pts) {
    const Point2d q = to_px(p);
    body_ += "  <circle cx=\"" + px(q.x()) + "\" cy=\"" + px(q.y()) + "\" r=\"" + px(radius) +
             "\" fill=\"" + fill + "\"/>\n";
  }
}

void SvgPlot::label(const Point2d& world, const std::string& text, const std::string& fill) {
  const Point2d q = to_px(world);
  body_ += "  <text x=\"" + px(q.x()) + "\" y=\"" + px(q.y()) + "\" font-size=\"12\" fill=\"" + fill +
           "\">" + escape_xml(text) + "</text>\n";
}

std::string SvgPlot::str() const {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n"
      "  <rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += body_;
  out += "  <text x=\"10\" y=\"590\" font-size=\"11\" fill=\"#666\">scale: 1 unit = " + px(scale_) +
         " px</text>\n";
  out += "</svg>\n";
  return out;
}

std::pair<Point2d, Point2d> bounds(const std::vector<const std::vector<Point2d>*>& sets) {
  Point2d lo = Point2d::Constant(INFINITY), hi = Point2d::Constant(-INFINITY);
  for (const auto* s : sets) {
    for (const auto& p : *s) {
      if (!p.allFinite()) continue;
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }
  if (!lo.allFinite()) return {Point2d(-1, -1), Point2d(1, 1)};
  return {lo, hi};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace binv::cli
