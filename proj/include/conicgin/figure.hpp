#pragma once

// Hand-written SVG for the limiting-shape figure: scaled staircases in light
// strokes, the limit line in a heavy stroke, and labelled axes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "conicgin/polytope.hpp"

namespace conicgin {

struct FigureFrame {
  static constexpr double kSize = 600.0;
  static constexpr double kMargin = 40.0;
  double extent = 1.0;  // data units shown along each axis

  double scale() const { return (kSize - 2 * kMargin) / extent; }
  double px(double u) const { return kMargin + u * scale(); }
  double py(double v) const { return kSize - kMargin - v * scale(); }
  double u_of(double x) const { return (x - kMargin) / scale(); }
  double v_of(double y) const { return (kSize - kMargin - y) / scale(); }
};

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

}  // namespace detail

/// Axis extent covering every intercept, rounded up to a whole unit.
inline double figure_extent(const LimitShape& limit, const std::vector<std::pair<int, GinStaircase>>& staircases) {
  double extent = std::max(detail::to_double(limit.gamma1), detail::to_double(limit.gamma2));
  for (const auto& [m, s] : staircases) {
    auto [g1, g2] = scaled_intercepts(s, m);
    extent = std::max({extent, detail::to_double(g1), detail::to_double(g2)});
  }
  return std::ceil(extent);
}

inline std::string limit_figure_svg(int r, const std::vector<std::pair<int, GinStaircase>>& staircases) {
  using detail::fmt2;
  const LimitShape limit = limit_shape(r);
  FigureFrame frame{figure_extent(limit, staircases)};
  const double top = frame.extent;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  svg += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";

  // axes and ticks
  svg += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + fmt2(frame.px(0)) + "\" y1=\"" + fmt2(frame.py(0)) + "\" x2=\"" + fmt2(frame.px(top)) +
         "\" y2=\"" + fmt2(frame.py(0)) + "\"/>\n";
  svg += "<line x1=\"" + fmt2(frame.px(0)) + "\" y1=\"" + fmt2(frame.py(0)) + "\" x2=\"" + fmt2(frame.px(0)) +
         "\" y2=\"" + fmt2(frame.py(top)) + "\"/>\n";
  for (int k = 1; k <= static_cast<int>(top); ++k) {
    svg += "<line x1=\"" + fmt2(frame.px(k)) + "\" y1=\"" + fmt2(frame.py(0)) + "\" x2=\"" + fmt2(frame.px(k)) +
           "\" y2=\"" + fmt2(frame.py(0) + 5) + "\"/>\n";
    svg += "<line x1=\"" + fmt2(frame.px(0) - 5) + "\" y1=\"" + fmt2(frame.py(k)) + "\" x2=\"" + fmt2(frame.px(0)) +
           "\" y2=\"" + fmt2(frame.py(k)) + "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int k = 0; k <= static_cast<int>(top); ++k) {
    svg += "<text x=\"" + fmt2(frame.px(k)) + "\" y=\"" + fmt2(frame.py(0) + 18) + "\" text-anchor=\"middle\">" +
           std::to_string(k) + "</text>\n";
    if (k > 0) {
      svg += "<text x=\"" + fmt2(frame.px(0) - 8) + "\" y=\"" + fmt2(frame.py(k) + 4) + "\" text-anchor=\"end\">" +
             std::to_string(k) + "</text>\n";
    }
  }
  svg += "</g>\n";

  for (const auto& [m, s] : staircases) {
    StaircasePolytope poly(s, Rational(1, m));
    const auto& corners = poly.corners();
    const double unit = 1.0 / m;
    std::string pts = fmt2(frame.px(0)) + "," + fmt2(frame.py(top));
    for (std::size_t a = 0; a + 1 < corners.size(); ++a) {
      const double v = corners[a].v * unit;
      pts += " " + fmt2(frame.px(a * unit)) + "," + fmt2(frame.py(v));
      pts += " " + fmt2(frame.px((a + 1) * unit)) + "," + fmt2(frame.py(v));
    }
    pts += " " + fmt2(frame.px(corners.back().u * unit)) + "," + fmt2(frame.py(0));
    pts += " " + fmt2(frame.px(top)) + "," + fmt2(frame.py(0));
    svg += "<polyline class=\"staircase\" data-m=\"" + std::to_string(m) +
           "\" fill=\"none\" stroke=\"#9ab\" stroke-width=\"1\" points=\"" + pts + "\"/>\n";
  }

  svg += "<line class=\"limit\" x1=\"" + fmt2(frame.px(detail::to_double(limit.gamma1))) + "\" y1=\"" +
         fmt2(frame.py(0)) + "\" x2=\"" + fmt2(frame.px(0)) + "\" y2=\"" +
         fmt2(frame.py(detail::to_double(limit.gamma2))) + "\" stroke=\"black\" stroke-width=\"4\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace conicgin
