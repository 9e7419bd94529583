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

#include "prspace/bounds.hpp"

#include <cmath>
#include <string>

namespace prspace {

namespace {

// Below this skew the closed forms are evaluated by series expansion; the
// direct log expressions cancel catastrophically as pi -> 0.
constexpr double kSeriesSkewCutoff = 1e-8;

// Slack for boundary comparisons: points on the minimum curve must count as
// achievable even after rounding in the boundary evaluation.
constexpr double kBoundaryEps = 1e-12;

void require_skew(double skew) {
  if (!(skew > 0.0) || !(skew < 1.0)) {
    throw Error(ErrorCode::kDegenerateSkew,
                "skew must lie strictly inside (0, 1), got " +
                    std::to_string(skew));
  }
}

void require_recall(double recall) {
  if (!std::isfinite(recall) || recall < 0.0 || recall > 1.0) {
    throw Error(ErrorCode::kDomainError,
                "recall must lie in [0, 1], got " + std::to_string(recall));
  }
}

}  // namespace

RecallRange::RecallRange(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi > 1.0 ||
      lo >= hi) {
    throw Error(ErrorCode::kInvalidRange,
                "recall range must satisfy 0 <= lo < hi <= 1, got [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

RecallRange RecallRange::full() noexcept { return RecallRange(); }

double min_precision(double recall, double skew) {
  require_skew(skew);
  require_recall(recall);
  return skew * recall / (1.0 - skew + skew * recall);
}

bool is_achievable(const PRPoint& point, double skew) {
  return point.precision >= min_precision(point.recall, skew) - kBoundaryEps;
}

MinCurve::MinCurve(double skew) : skew_(skew) { require_skew(skew); }

MinCurve::Polyline MinCurve::sample(double grid_step) const {
  if (!std::isfinite(grid_step) || grid_step <= 0.0 || grid_step > 1.0) {
    throw Error(ErrorCode::kDomainError,
                "grid step must lie in (0, 1], got " + std::to_string(grid_step));
  }
  Polyline line{grid_step, {}};
  for (std::size_t i = 0; static_cast<double>(i) * grid_step < 1.0 - 1e-12; ++i) {
    const double r = static_cast<double>(i) * grid_step;
    line.points.emplace_back(r, (*this)(r));
  }
  line.points.emplace_back(1.0, skew_);
  return line;
}

MinCurve minimum_pr_curve(double skew) { return MinCurve(skew); }

double aucpr_min_range(double skew, const RecallRange& range) {
  require_skew(skew);
  const double a = range.lo();
  const double b = range.hi();
  if (skew < kSeriesSkewCutoff) {
    // pi r / (1 - pi (1 - r)) = pi r (1 + pi (1 - r) + O(pi^2)); integrating
    // termwise leaves an error of order pi^3, far below double rounding here.
    const double m2 = (b * b - a * a) / 2.0;
    const double m3 = (b * b * b - a * a * a) / 3.0;
    return skew * m2 + skew * skew * (m2 - m3);
  }
  // The antiderivative of pi r / (1 - pi + pi r) is
  //   r - ((1 - pi) / pi) ln(1 - pi + pi r),
  // and the log of the endpoint ratio is log1p of a small increment.
  const double u = skew * (b - a) / (1.0 - skew + skew * a);
  return (b - a) - (1.0 - skew) / skew * std::log1p(u);
}

double aucpr_min(double skew) {
  return aucpr_min_range(skew, RecallRange::full());
}

double ap_min(std::int64_t pos, std::int64_t neg) {
  if (pos < 1) {
    throw Error(ErrorCode::kNoPositives,
                "minimum AP needs at least one positive example");
  }
  if (neg < 0) {
    throw Error(ErrorCode::kDomainError,
                "negative count must be nonnegative, got " + std::to_string(neg));
  }
  double sum = 0.0;
  for (std::int64_t i = 1; i <= pos; ++i) {
    sum += static_cast<double>(i) / static_cast<double>(i + neg);
  }
  return sum / static_cast<double>(pos);
}

}  // namespace prspace
