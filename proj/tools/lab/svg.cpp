#include "lab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace repeller::lab {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;
  double map(double v, double a, double b) const {
    const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
    return a + t * (b - a);
  }
  bool usable(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
};

Axis fit_axis(const std::vector<Series>& series, bool y, bool log) {
  Axis ax;
  ax.log = log;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto take = [&](double v) {
    if (!ax.usable(v)) return;
    const double t = log ? std::log10(v) : v;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  };
  for (const Series& s : series) {
    for (double v : y ? s.y : s.x) take(v);
    if (y) {
      for (double v : s.lo) take(v);
      for (double v : s.hi) take(v);
    }
  }
  if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
  if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  const double pad = 0.05 * (hi - lo);
  ax.lo = lo - pad;
  ax.hi = hi + pad;
  return ax;
}

}  // namespace

std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series) {
  const double W = spec.width, H = spec.height;
  const double left = 70, right = W - 150, top = 40, bottom = H - 50;
  const Axis ax = fit_axis(series, false, spec.logx);
  const Axis ay = fit_axis(series, true, spec.logy);
  auto X = [&](double v) { return ax.map(v, left, right); };
  auto Y = [&](double v) { return ay.map(v, bottom, top); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) +
       "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + fmt(W / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" + escape(spec.title) +
       "</text>\n";
  s += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(right - left) + "\" height=\"" +
       fmt(bottom - top) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = ax.lo + (ax.hi - ax.lo) * i / 4.0;
    const double fy = ay.lo + (ay.hi - ay.lo) * i / 4.0;
    const double vx = ax.log ? std::pow(10.0, fx) : fx;
    const double vy = ay.log ? std::pow(10.0, fy) : fy;
    const double px = left + (right - left) * i / 4.0, py = bottom - (bottom - top) * i / 4.0;
    s += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(bottom) + "\" x2=\"" + fmt(px) + "\" y2=\"" + fmt(bottom + 4) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(bottom + 16) + "\" text-anchor=\"middle\">" + tick_label(vx) +
         "</text>\n";
    s += "<line x1=\"" + fmt(left - 4) + "\" y1=\"" + fmt(py) + "\" x2=\"" + fmt(left) + "\" y2=\"" + fmt(py) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(left - 6) + "\" y=\"" + fmt(py + 4) + "\" text-anchor=\"end\">" + tick_label(vy) +
         "</text>\n";
  }
  s += "<text x=\"" + fmt((left + right) / 2) + "\" y=\"" + fmt(H - 12) + "\" text-anchor=\"middle\">" +
       escape(spec.xlabel) + "</text>\n";
  s += "<text x=\"16\" y=\"" + fmt((top + bottom) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
       fmt((top + bottom) / 2) + ")\">" + escape(spec.ylabel) + "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& sr = series[k];
    const std::string color = kPalette[k % (sizeof kPalette / sizeof kPalette[0])];
    std::string pts;
    for (std::size_t i = 0; i < sr.x.size() && i < sr.y.size(); ++i) {
      if (!ax.usable(sr.x[i]) || !ay.usable(sr.y[i])) continue;
      pts += fmt(X(sr.x[i])) + "," + fmt(Y(sr.y[i])) + " ";
      s += "<circle cx=\"" + fmt(X(sr.x[i])) + "\" cy=\"" + fmt(Y(sr.y[i])) + "\" r=\"2.5\" fill=\"" + color +
           "\"/>\n";
      if (i < sr.lo.size() && i < sr.hi.size() && ay.usable(sr.lo[i]) && ay.usable(sr.hi[i]))
        s += "<line x1=\"" + fmt(X(sr.x[i])) + "\" y1=\"" + fmt(Y(sr.lo[i])) + "\" x2=\"" + fmt(X(sr.x[i])) +
             "\" y2=\"" + fmt(Y(sr.hi[i])) + "\" stroke=\"" + color + "\"/>\n";
    }
    if (!pts.empty()) {
      pts.pop_back();
      s += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color + "\"" +
           (sr.dashed ? " stroke-dasharray=\"5,3\"" : "") + "/>\n";
    }
    const double ly = top + 14.0 * static_cast<double>(k);
    s += "<line x1=\"" + fmt(right + 10) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(right + 30) + "\" y2=\"" +
         fmt(ly) + "\" stroke=\"" + color + "\"" + (sr.dashed ? " stroke-dasharray=\"5,3\"" : "") + "/>\n";
    s += "<text x=\"" + fmt(right + 34) + "\" y=\"" + fmt(ly + 4) + "\">" + escape(sr.name) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace repeller::lab
