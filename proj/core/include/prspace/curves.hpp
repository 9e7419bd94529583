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

#ifndef PRSPACE_CURVES_HPP_
#define PRSPACE_CURVES_HPP_

#include <span>
#include <vector>

#include "prspace/bounds.hpp"
#include "prspace/types.hpp"

namespace prspace {

/// Order of positives and negatives within a tied-score group when computing
/// average precision. Pessimistic (negatives first) is the default.
enum class TieOrder { kPessimistic, kOptimistic };

enum class AreaMethod { kClosedForm, kNumeric };

/// An area-under-curve value together with the recall range it covers and
/// the method that produced it. Always 0 <= value <= range width.
struct AreaResult {
  double value;
  RecallRange range;
  AreaMethod method;
  double step;  // grid step for kNumeric, 0 for kClosedForm
};

/// A PR curve as count-space cutpoints plus linear interpolation between
/// them in (tp, fp) space. Linear count interpolation is what makes the
/// curve correct: straight lines in PR space overestimate the area, because
/// precision varies hyperbolically between cutpoints.
class PRCurve {
 public:
  explicit PRCurve(Cutpoints cuts);

  const ClassBalance& balance() const noexcept { return cuts_.balance(); }
  const Cutpoints& cuts() const noexcept { return cuts_; }
  double skew() const noexcept { return cuts_.balance().skew(); }

  /// Precision of the interpolated curve at the given recall. The curve is
  /// evaluated right-continuously: at a recall where precision drops
  /// vertically, the value after the drop is returned; at recall 0 the
  /// right-limit; at recall 1 the precision when tp first reaches pos.
  double precision_at(double recall) const;

  /// One recall-carrying stretch of the interpolated curve: tp in
  /// [tp_lo, tp_hi] with fp(tp) = fp_lo + slope * (tp - tp_lo).
  struct Segment {
    double tp_lo;
    double tp_hi;
    double fp_lo;
    double slope;      // >= 0
    double intercept;  // c in fp(tp) = slope * tp + c
    bool constant;     // c == 0 exactly: precision is constant on the segment
  };
  const std::vector<Segment>& segments() const noexcept { return segments_; }

 private:
  Cutpoints cuts_;
  std::vector<Segment> segments_;
};

/// Builds the interpolated PR curve of a ranking. Throws DegenerateDataset
/// unless the data has at least one positive and one negative.
PRCurve pr_curve(const ScoredDataset& data);

/// Area under the curve over the recall range, via the exact antiderivative
/// of tp / ((1 + s) tp + c) on each linear-count segment.
AreaResult aucpr(const PRCurve& curve, const RecallRange& range = RecallRange::full());

/// Same area by composite trapezoidal integration within each smooth
/// segment. Useful as a cross-check of the closed form; `step` is the
/// recall-space grid width.
AreaResult aucpr_numeric(const PRCurve& curve, const RecallRange& range, double step);

/// Mean precision measured at each positive example's rank. Tied scores are
/// ordered within their group by `ties`.
double average_precision(const ScoredDataset& data,
                         TieOrder ties = TieOrder::kPessimistic);

/// Vertically averaged summary of several fold curves, with each fold's
/// minimum-precision band so callers can see how the unachievable region
/// varies across folds. Precisions at the same grid recall have different
/// attainable floors when fold skews differ; the mean alone hides that.
struct VerticalAverage {
  double grid_step;
  std::vector<double> recall;          // grid over [0, 1], endpoints included
  std::vector<double> mean_precision;  // unweighted mean across folds
  std::vector<double> fold_skew;
  std::vector<std::vector<double>> fold_min_precision;  // [fold][grid index]
};

VerticalAverage vertical_average(std::span<const PRCurve> curves,
                                 double grid_step = 0.01);

}  // namespace prspace

#endif  // PRSPACE_CURVES_HPP_
