#pragma once

#include <binv/cli/run_config.hpp>
#include <binv/core_geometry.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace binv::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits, round-trip exact.
std::string fmt(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::size_t columns_;
  std::string text_;
};

/// One pass/fail comparison against a tolerance.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

/// passed = value < tolerance (NaN fails).
Check make_check(std::string name, double value, double tolerance, std::string detail = {});
Check make_flag_check(std::string name, bool passed, std::string detail);

Json config_json(const RunConfig& cfg, const std::string& command);
Json checks_json(const std::vector<Check>& checks);
/// {"config": ..., "results": [...], "checks": [...]}
std::string json_report(const Json& config, const Json& results, const std::vector<Check>& checks);

/// Fixed 800×600 canvas with a uniform world → pixel map (y up).
class SvgPlot {
 public:
  SvgPlot(Point2d world_min, Point2d world_max);
  void polyline(const std::vector<Point2d>& pts, const std::string& stroke, bool closed,
                double width = 1.5, const std::string& dash = "");
  void dots(const std::vector<Point2d>& pts, const std::string& fill, double radius = 2.0);
  void label(const Point2d& world, const std::string& text, const std::string& fill = "#333");
  std::string str() const;

 private:
  Point2d to_px(const Point2d& p) const;

  double scale_ = 1.0;
  Point2d origin_ = Point2d::Zero();
  std::string body_;
};

/// Bounding box of several point sets.
std::pair<Point2d, Point2d> bounds(const std::vector<const std::vector<Point2d>*>& sets);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace binv::cli
