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

#ifndef PRSPACE_BOUNDS_HPP_
#define PRSPACE_BOUNDS_HPP_

#include <cstdint>
#include <vector>

#include "prspace/types.hpp"

namespace prspace {

/// A closed recall interval [lo, hi] with 0 <= lo < hi <= 1.
class RecallRange {
 public:
  RecallRange(double lo, double hi);
  static RecallRange full() noexcept;

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  bool is_full() const noexcept { return lo_ == 0.0 && hi_ == 1.0; }

  friend bool operator==(const RecallRange&, const RecallRange&) = default;

 private:
  RecallRange() noexcept : lo_(0.0), hi_(1.0) {}
  double lo_;
  double hi_;
};

/// Lowest precision any valid confusion matrix can produce at the given
/// recall: pi*r / (1 - pi + pi*r). Requires recall in [0, 1] and skew
/// strictly inside (0, 1); degenerate skews throw DegenerateSkew.
double min_precision(double recall, double skew);

/// True iff the point lies on or above the minimum precision for its recall.
/// Achievability depends only on the skew, not on the data set size.
bool is_achievable(const PRPoint& point, double skew);

/// The boundary between achievable and unachievable PR space for one skew:
/// the curve traced by the worst possible ranking. Strictly increasing and
/// concave, with value 0 at recall 0 and skew at recall 1.
class MinCurve {
 public:
  explicit MinCurve(double skew);

  double skew() const noexcept { return skew_; }

  /// Minimum achievable precision at the given recall.
  double operator()(double recall) const { return min_precision(recall, skew_); }

  /// Sampled polyline for plotting, with the grid step it was built at.
  struct Polyline {
    double grid_step;
    std::vector<PRPoint> points;
  };
  Polyline sample(double grid_step = 0.01) const;

 private:
  double skew_;
};

/// Convenience factory for MinCurve.
MinCurve minimum_pr_curve(double skew);

/// Area of the unachievable region over the full recall range:
/// 1 + (1 - pi) ln(1 - pi) / pi. Every ranking's AUCPR is at least this.
double aucpr_min(double skew);

/// Area of the unachievable region over recalls [a, b]:
/// (b - a) + ((1 - pi)/pi) ln((pi(a-1) + 1) / (pi(b-1) + 1)).
double aucpr_min_range(double skew, const RecallRange& range);

/// Minimum average precision for a data set with the given class counts:
/// (1/pos) * sum_{i=1..pos} i / (i + neg). Equals 1 when neg = 0.
double ap_min(std::int64_t pos, std::int64_t neg);

}  // namespace prspace

#endif  // PRSPACE_BOUNDS_HPP_
