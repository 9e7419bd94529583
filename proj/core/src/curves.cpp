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

#include "prspace/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace prspace {

namespace {

// Exact zero test for the fp intercept c = fp_a - slope * tp_a, i.e. whether
// the extended segment passes through the count-space origin. c == 0 is the
// constant-precision case and must not hit the log path.
bool intercept_is_zero(std::int64_t tp_a, std::int64_t fp_a, std::int64_t d_tp,
                       std::int64_t d_fp) {
  return static_cast<__int128>(fp_a) * d_tp ==
         static_cast<__int128>(d_fp) * tp_a;
}

// Integral of precision tp / (alpha tp + c) over tp in [x0, x1] within one
// segment, in count units (divide by pos for recall units). From
//   d/dt [ t/alpha - (c/alpha^2) ln(alpha t + c) ] = t / (alpha t + c),
// with alpha = 1 + slope >= 1, so the form has no singularity; c == 0 is
// handled as the constant rectangle it is.
double segment_area_counts(const PRCurve::Segment& seg, double x0, double x1) {
  const double alpha = 1.0 + seg.slope;
  if (seg.constant) {
    return (x1 - x0) / alpha;
  }
  const double a0 = alpha * x0 + seg.intercept;  // = x0 + fp(x0), > 0 here
  const double log_ratio = std::log1p(alpha * (x1 - x0) / a0);
  return (x1 - x0) / alpha - seg.intercept / (alpha * alpha) * log_ratio;
}

double segment_precision(const PRCurve::Segment& seg, double t) {
  if (t <= 0.0) {
    // Right-limit at the origin: 1/(1+slope) if the segment passes through
    // it, otherwise fp dominates and precision vanishes.
    return seg.constant ? 1.0 / (1.0 + seg.slope) : 0.0;
  }
  const double fp = seg.fp_lo + seg.slope * (t - seg.tp_lo);
  return t / (t + fp);
}

void require_step(double step, double max_step) {
  if (!std::isfinite(step) || step <= 0.0 || step > max_step) {
    throw Error(ErrorCode::kDomainError,
                "grid step must lie in (0, " + std::to_string(max_step) +
                    "], got " + std::to_string(step));
  }
}

}  // namespace

PRCurve::PRCurve(Cutpoints cuts) : cuts_(std::move(cuts)) {
  const auto& pts = cuts_.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const std::int64_t d_tp = pts[i].tp - pts[i - 1].tp;
    if (d_tp == 0) {
      continue;  // fp-only step: no recall width
    }
    const std::int64_t d_fp = pts[i].fp - pts[i - 1].fp;
    const double slope = static_cast<double>(d_fp) / static_cast<double>(d_tp);
    segments_.push_back(Segment{
        .tp_lo = static_cast<double>(pts[i - 1].tp),
        .tp_hi = static_cast<double>(pts[i].tp),
        .fp_lo = static_cast<double>(pts[i - 1].fp),
        .slope = slope,
        .intercept = static_cast<double>(pts[i - 1].fp) -
                     slope * static_cast<double>(pts[i - 1].tp),
        .constant = intercept_is_zero(pts[i - 1].tp, pts[i - 1].fp, d_tp, d_fp),
    });
  }
}

double PRCurve::precision_at(double recall) const {
  if (!std::isfinite(recall) || recall < 0.0 || recall > 1.0) {
    throw Error(ErrorCode::kDomainError,
                "recall must lie in [0, 1], got " + std::to_string(recall));
  }
  const double t = recall * static_cast<double>(balance().pos());
  // Right-continuous: the first segment extending beyond t, or the last one
  // when tp has already reached pos.
  auto it = std::upper_bound(
      segments_.begin(), segments_.end(), t,
      [](double value, const Segment& seg) { return value < seg.tp_hi; });
  const Segment& seg = it == segments_.end() ? segments_.back() : *it;
  return segment_precision(seg, std::min(t, seg.tp_hi));
}

PRCurve pr_curve(const ScoredDataset& data) { return PRCurve(cutpoints(data)); }

AreaResult aucpr(const PRCurve& curve, const RecallRange& range) {
  const double pos = static_cast<double>(curve.balance().pos());
  const double t_lo = range.lo() * pos;
  const double t_hi = range.hi() * pos;
  double sum = 0.0;
  for (const PRCurve::Segment& seg : curve.segments()) {
    const double x0 = std::max(seg.tp_lo, t_lo);
    const double x1 = std::min(seg.tp_hi, t_hi);
    if (x1 > x0) {
      sum += segment_area_counts(seg, x0, x1);
    }
  }
  const double value = std::clamp(sum / pos, 0.0, range.width());
  return AreaResult{value, range, AreaMethod::kClosedForm, 0.0};
}

AreaResult aucpr_numeric(const PRCurve& curve, const RecallRange& range,
                         double step) {
  require_step(step, 0.5);
  const double pos = static_cast<double>(curve.balance().pos());
  const double t_lo = range.lo() * pos;
  const double t_hi = range.hi() * pos;
  const double t_step = step * pos;
  double sum = 0.0;
  // Trapezoids within each smooth segment; never across the precision drops
  // at segment boundaries.
  for (const PRCurve::Segment& seg : curve.segments()) {
    const double x0 = std::max(seg.tp_lo, t_lo);
    const double x1 = std::min(seg.tp_hi, t_hi);
    if (x1 <= x0) {
      continue;
    }
    const auto n = static_cast<std::size_t>(std::ceil((x1 - x0) / t_step));
    const double h = (x1 - x0) / static_cast<double>(n);
    double acc = 0.5 * (segment_precision(seg, x0) + segment_precision(seg, x1));
    for (std::size_t k = 1; k < n; ++k) {
      acc += segment_precision(seg, x0 + static_cast<double>(k) * h);
    }
    sum += acc * h;
  }
  const double value = std::clamp(sum / pos, 0.0, range.width());
  return AreaResult{value, range, AreaMethod::kNumeric, step};
}

double average_precision(const ScoredDataset& data, TieOrder ties) {
  if (data.positives() < 1) {
    throw Error(ErrorCode::kDegenerateDataset,
                "average precision needs at least one positive example");
  }
  std::vector<std::pair<double, int>> ranked;
  ranked.reserve(data.size());
  for (const ScoredRecord& rec : data.records()) {
    ranked.emplace_back(rec.score, rec.label);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  double sum = 0.0;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::size_t i = 0;
  while (i < ranked.size()) {
    const double threshold = ranked[i].first;
    std::int64_t group_pos = 0;
    std::int64_t group_neg = 0;
    for (; i < ranked.size() && ranked[i].first == threshold; ++i) {
      (ranked[i].second == 1 ? group_pos : group_neg) += 1;
    }
    if (ties == TieOrder::kPessimistic) {
      fp += group_neg;
    }
    for (std::int64_t j = 1; j <= group_pos; ++j) {
      sum += static_cast<double>(tp + j) / static_cast<double>(tp + j + fp);
    }
    tp += group_pos;
    if (ties == TieOrder::kOptimistic) {
      fp += group_neg;
    }
  }
  return sum / static_cast<double>(data.positives());
}

VerticalAverage vertical_average(std::span<const PRCurve> curves,
                                 double grid_step) {
  if (curves.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "vertical averaging needs at least one curve");
  }
  require_step(grid_step, 0.1);

  VerticalAverage out;
  out.grid_step = grid_step;
  for (std::size_t i = 0; static_cast<double>(i) * grid_step < 1.0 - 1e-12; ++i) {
    out.recall.push_back(static_cast<double>(i) * grid_step);
  }
  out.recall.push_back(1.0);

  out.fold_skew.reserve(curves.size());
  out.fold_min_precision.reserve(curves.size());
  for (const PRCurve& curve : curves) {
    out.fold_skew.push_back(curve.skew());
    std::vector<double> band;
    band.reserve(out.recall.size());
    for (double r : out.recall) {
      band.push_back(min_precision(r, curve.skew()));
    }
    out.fold_min_precision.push_back(std::move(band));
  }

  out.mean_precision.reserve(out.recall.size());
  for (double r : out.recall) {
    double acc = 0.0;
    for (const PRCurve& curve : curves) {
      acc += curve.precision_at(r);
    }
    out.mean_precision.push_back(acc / static_cast<double>(curves.size()));
  }
  return out;
}

}  // namespace prspace
