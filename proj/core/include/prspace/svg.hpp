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

#ifndef PRSPACE_SVG_HPP_
#define PRSPACE_SVG_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "prspace/bounds.hpp"
#include "prspace/curves.hpp"

namespace prspace {

struct PlotCurve {
  std::string name;
  PRCurve curve;
};

/// What to draw. Every distinct skew present (each data curve's, plus any
/// extra ones) gets a minimum PR curve overlay with its unachievable region
/// shaded and its minimum area annotated; the overlay cannot be turned off.
struct PlotSpec {
  std::vector<PlotCurve> curves;
  std::vector<double> extra_skews;  // minimum curves to draw without data
  RecallRange range = RecallRange::full();
  double grid_step = 0.01;  // sampling resolution for curve polylines
  int width = 800;
  int height = 600;
};

/// Renders the plot as an SVG 1.1 document. Output is byte-deterministic
/// for identical specs. Throws EmptyInput when there is nothing to draw.
std::string render_svg(const PlotSpec& spec);

/// render_svg plus a write to disk; throws WriteError on I/O failure.
void write_svg_file(const PlotSpec& spec, const std::filesystem::path& path);

}  // namespace prspace

#endif  // PRSPACE_SVG_HPP_
