#pragma once

#include <string>
#include <vector>

namespace repeller::lab {

struct Series {
  std::string name;
  std::vector<double> x, y;
  /// Optional error bars; empty or the same length as y.
  std::vector<double> lo, hi;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string xlabel, ylabel;
  bool logx = false, logy = false;
  int width = 640, height = 420;
};

/// Self-contained SVG line plot. Non-finite or (on log axes) nonpositive
/// points are skipped.
std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace repeller::lab
