/*
 * Copyright 2026 The prspace Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "prspace/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "prspace/io.hpp"

namespace prspace {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 24.0;
constexpr double kMarginBottom = 56.0;

const char* const kCurveColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

std::string px(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;  // pixel bounds of the plot area
  RecallRange range;

  double x(double recall) const {
    return x0 + (recall - range.lo()) / range.width() * (x1 - x0);
  }
  double y(double precision) const { return y0 - precision * (y0 - y1); }
};

std::string polyline_points(const Frame& frame,
                            const std::vector<std::pair<double, double>>& pts) {
  std::string out;
  for (const auto& [r, p] : pts) {
    if (!out.empty()) {
      out += ' ';
    }
    out += px(frame.x(r)) + "," + px(frame.y(p));
  }
  return out;
}

// Vertex list of the interpolated curve over [0, 1]: segment endpoints give
// the vertical drops, interior samples give the hyperbolic arcs.
std::vector<std::pair<double, double>> curve_polyline(const PRCurve& curve,
                                                      double grid_step) {
  const double pos = static_cast<double>(curve.balance().pos());
  std::vector<std::pair<double, double>> pts;
  pts.emplace_back(0.0, curve.precision_at(0.0));
  for (const PRCurve::Segment& seg : curve.segments()) {
    const double width = (seg.tp_hi - seg.tp_lo) / pos;
    const auto samples =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(width / grid_step)));
    for (std::size_t j = 0; j <= samples; ++j) {
      const double t =
          seg.tp_lo + (seg.tp_hi - seg.tp_lo) *
                          (static_cast<double>(j) / static_cast<double>(samples));
      const double fp = seg.fp_lo + seg.slope * (t - seg.tp_lo);
      const double p = t > 0.0 ? t / (t + fp)
                               : (seg.fp_lo == 0.0 ? 1.0 / (1.0 + seg.slope) : 0.0);
      if (pts.back() != std::make_pair(t / pos, p)) {
        pts.emplace_back(t / pos, p);
      }
    }
  }
  return pts;
}

std::vector<std::pair<double, double>> min_curve_polyline(double skew,
                                                          const RecallRange& range,
                                                          double grid_step) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0;; ++i) {
    const double r = range.lo() + static_cast<double>(i) * grid_step;
    if (r >= range.hi() - 1e-12) {
      break;
    }
    pts.emplace_back(r, min_precision(r, skew));
  }
  pts.emplace_back(range.hi(), min_precision(range.hi(), skew));
  return pts;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (spec.curves.empty() && spec.extra_skews.empty()) {
    throw Error(ErrorCode::kEmptyInput, "nothing to plot");
  }
  if (!std::isfinite(spec.grid_step) || spec.grid_step <= 0.0 ||
      spec.grid_step > 0.1) {
    throw Error(ErrorCode::kDomainError,
                "grid step must lie in (0, 0.1], got " +
                    std::to_string(spec.grid_step));
  }

  // Every distinct skew on the plot gets its minimum curve and shaded
  // unachievable region; this overlay is not optional.
  std::vector<double> skews;
  for (const PlotCurve& pc : spec.curves) {
    skews.push_back(pc.curve.skew());
  }
  for (double skew : spec.extra_skews) {
    skews.push_back(MinCurve(skew).skew());  // validates
  }
  std::sort(skews.begin(), skews.end());
  skews.erase(std::unique(skews.begin(), skews.end()), skews.end());

  const double w = spec.width;
  const double h = spec.height;
  const Frame frame{kMarginLeft, w - kMarginRight, h - kMarginBottom,
                    kMarginTop, spec.range};
  const FloatFormat fmt;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
         "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
  svg += "<defs><clipPath id=\"plot-area\"><rect x=\"" + px(frame.x0) +
         "\" y=\"" + px(frame.y1) + "\" width=\"" + px(frame.x1 - frame.x0) +
         "\" height=\"" + px(frame.y0 - frame.y1) + "\"/></clipPath></defs>\n";
  svg += "<rect width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" fill=\"white\"/>\n";

  // Axes and grid lines.
  svg += "<g stroke=\"#999999\" stroke-width=\"1\" font-family=\"sans-serif\" "
         "font-size=\"12\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double rx = spec.range.lo() + spec.range.width() * i / kTicks;
    const double xpix = frame.x(rx);
    svg += "<line x1=\"" + px(xpix) + "\" y1=\"" + px(frame.y0) + "\" x2=\"" +
           px(xpix) + "\" y2=\"" + px(frame.y0 + 5) + "\"/>\n";
    svg += "<text x=\"" + px(xpix) + "\" y=\"" + px(frame.y0 + 20) +
           "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333333\">" +
           px(rx) + "</text>\n";
    const double py_val = static_cast<double>(i) / kTicks;
    const double ypix = frame.y(py_val);
    svg += "<line x1=\"" + px(frame.x0 - 5) + "\" y1=\"" + px(ypix) +
           "\" x2=\"" + px(frame.x0) + "\" y2=\"" + px(ypix) + "\"/>\n";
    svg += "<text x=\"" + px(frame.x0 - 9) + "\" y=\"" + px(ypix + 4) +
           "\" text-anchor=\"end\" stroke=\"none\" fill=\"#333333\">" +
           px(py_val) + "</text>\n";
  }
  svg += "<rect x=\"" + px(frame.x0) + "\" y=\"" + px(frame.y1) + "\" width=\"" +
         px(frame.x1 - frame.x0) + "\" height=\"" + px(frame.y0 - frame.y1) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  svg += "<text x=\"" + px((frame.x0 + frame.x1) / 2) + "\" y=\"" +
         px(frame.y0 + 42) +
         "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333333\" "
         "font-size=\"14\">Recall</text>\n";
  svg += "<text x=\"18\" y=\"" + px((frame.y0 + frame.y1) / 2) +
         "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333333\" "
         "font-size=\"14\" transform=\"rotate(-90 18 " +
         px((frame.y0 + frame.y1) / 2) + ")\">Precision</text>\n";
  svg += "</g>\n";

  // Unachievable regions and minimum curves, one per distinct skew.
  svg += "<g clip-path=\"url(#plot-area)\">\n";
  for (double skew : skews) {
    auto boundary = min_curve_polyline(skew, spec.range, spec.grid_step);
    auto region = boundary;
    region.emplace_back(spec.range.hi(), 0.0);
    region.emplace_back(spec.range.lo(), 0.0);
    svg += "<polygon class=\"unachievable-region\" points=\"" +
           polyline_points(frame, region) +
           "\" fill=\"#bbbbbb\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
    svg += "<polyline class=\"min-curve\" points=\"" +
           polyline_points(frame, boundary) +
           "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 4\"/>\n";
  }

  for (std::size_t i = 0; i < spec.curves.size(); ++i) {
    const char* color = kCurveColors[i % std::size(kCurveColors)];
    svg += "<polyline class=\"pr-curve\" points=\"" +
           polyline_points(frame,
                           curve_polyline(spec.curves[i].curve, spec.grid_step)) +
           "\" fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\"/>\n";
  }
  svg += "</g>\n";

  // Legend: data curves, then one annotation per skew with its minimum area
  // over the plotted recall range.
  double legend_y = frame.y1 + 16;
  const double legend_x = frame.x1 - 300;
  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
  for (std::size_t i = 0; i < spec.curves.size(); ++i) {
    const char* color = kCurveColors[i % std::size(kCurveColors)];
    svg += "<line x1=\"" + px(legend_x) + "\" y1=\"" + px(legend_y - 4) +
           "\" x2=\"" + px(legend_x + 24) + "\" y2=\"" + px(legend_y - 4) +
           "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + px(legend_x + 30) + "\" y=\"" + px(legend_y) + "\">" +
           xml_escape(spec.curves[i].name) + "</text>\n";
    legend_y += 16;
  }
  for (double skew : skews) {
    const double min_area = aucpr_min_range(skew, spec.range);
    svg += "<line x1=\"" + px(legend_x) + "\" y1=\"" + px(legend_y - 4) +
           "\" x2=\"" + px(legend_x + 24) + "\" y2=\"" + px(legend_y - 4) +
           "\" stroke=\"#555555\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 4\"/>\n";
    svg += "<text x=\"" + px(legend_x + 30) + "\" y=\"" + px(legend_y) +
           "\" class=\"min-annotation\">pi = " + format_double(skew, fmt) +
           ", min AUCPR [" + format_double(spec.range.lo(), fmt) + ", " +
           format_double(spec.range.hi(), fmt) + "] = " +
           format_double(min_area, fmt) + "</text>\n";
    legend_y += 16;
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void write_svg_file(const PlotSpec& spec, const std::filesystem::path& path) {
  write_text_file(path, render_svg(spec));
}

}  // namespace prspace
