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

#ifndef PRSPACE_SCORES_HPP_
#define PRSPACE_SCORES_HPP_

#include <string_view>

#include "prspace/bounds.hpp"
#include "prspace/curves.hpp"

namespace prspace {

/// Normalized AUCPR: (aucpr - aucpr_min) / (aucpr_max - aucpr_min), where
/// aucpr_max is the range width. 0 for the worst possible ranking, 1 for the
/// best, for any skew. Throws OutOfBounds if the value lies outside its
/// analytic range by more than 1e-9.
double aucnpr(double aucpr_value, double skew,
              const RecallRange& range = RecallRange::full());

/// Normalization against random guessing (whose full-range AUCPR is the
/// skew): (aucpr - pi) / (1 - pi). Can go negative for rankings worse than
/// random; provided for comparison with aucnpr, not recommended.
double random_normalized_aucpr(double aucpr_value, double skew);

/// F-measure with recall weighted beta times as much as precision:
/// (1 + beta^2) p r / (beta^2 p + r). Throws UndefinedScore at p = r = 0.
double f_beta(double recall, double precision, double beta);

/// F1 variant that accounts for the achievability floor: 0 for any point no
/// better than random guessing (p <= pi), otherwise the harmonic mean of
/// recall and precision normalized to random guessing, (p - pi)/(1 - pi).
/// Zero on the entire minimum PR curve.
double modified_f1(double recall, double precision, double skew);

/// Best f_beta over all cutpoints of the ranking (tp = 0 points carry no
/// defined score and are skipped).
double max_f_beta(const PRCurve& curve, double beta);

enum class ScoreKind { kAucnpr, kRandomNormalizedAucpr, kFBeta, kModifiedF1 };

std::string_view score_kind_name(ScoreKind kind) noexcept;

/// A labeled score value with the context it was computed under. aucnpr and
/// modified F1 values must lie in [0, 1]; the random-guessing normalization
/// may be negative.
struct ScoreValue {
  ScoreValue(ScoreKind kind, double value, double skew, RecallRange range);

  ScoreKind kind;
  double value;
  double skew;
  RecallRange range;
};

}  // namespace prspace

#endif  // PRSPACE_SCORES_HPP_
