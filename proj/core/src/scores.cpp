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

#include "prspace/scores.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace prspace {

namespace {

constexpr double kRangeTolerance = 1e-9;

// Values this close to the random-guessing floor (on the normalized scale)
// collapse to exactly 0, so points on the minimum curve score 0 even after
// rounding in the boundary evaluation.
constexpr double kRandomGuessEps = 1e-12;

void require_unit_interval(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw Error(ErrorCode::kDomainError,
                std::string(name) + " must lie in [0, 1], got " +
                    std::to_string(value));
  }
}

}  // namespace

double aucnpr(double aucpr_value, double skew, const RecallRange& range) {
  const double lo = aucpr_min_range(skew, range);  // validates the skew
  const double hi = range.width();                 // AUCPR_MAX
  if (!std::isfinite(aucpr_value) || aucpr_value < lo - kRangeTolerance ||
      aucpr_value > hi + kRangeTolerance) {
    throw Error(ErrorCode::kOutOfBounds,
                "aucpr value " + std::to_string(aucpr_value) +
                    " lies outside its analytic range [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "] at skew " +
                    std::to_string(skew));
  }
  return (aucpr_value - lo) / (hi - lo);
}

double random_normalized_aucpr(double aucpr_value, double skew) {
  if (!(skew > 0.0) || !(skew < 1.0)) {
    throw Error(ErrorCode::kDegenerateSkew,
                "skew must lie strictly inside (0, 1), got " +
                    std::to_string(skew));
  }
  if (!std::isfinite(aucpr_value)) {
    throw Error(ErrorCode::kDomainError, "aucpr value must be finite");
  }
  return (aucpr_value - skew) / (1.0 - skew);
}

double f_beta(double recall, double precision, double beta) {
  require_unit_interval(recall, "recall");
  require_unit_interval(precision, "precision");
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw Error(ErrorCode::kDomainError,
                "beta must be positive, got " + std::to_string(beta));
  }
  if (recall == 0.0 && precision == 0.0) {
    throw Error(ErrorCode::kUndefinedScore,
                "F_beta is undefined at precision = recall = 0");
  }
  const double b2 = beta * beta;
  return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

double modified_f1(double recall, double precision, double skew) {
  require_unit_interval(recall, "recall");
  require_unit_interval(precision, "precision");
  if (!(skew > 0.0) || !(skew < 1.0)) {
    throw Error(ErrorCode::kDegenerateSkew,
                "skew must lie strictly inside (0, 1), got " +
                    std::to_string(skew));
  }
  const double normalized = (precision - skew) / (1.0 - skew);
  if (normalized <= kRandomGuessEps || recall == 0.0) {
    return 0.0;  // no better than random guessing
  }
  return 2.0 * recall * normalized / (recall + normalized);
}

double max_f_beta(const PRCurve& curve, double beta) {
  const std::int64_t pos = curve.balance().pos();
  double best = 0.0;
  bool found = false;
  for (const CountPoint& pt : curve.cuts().points()) {
    if (pt.tp == 0) {
      continue;
    }
    const double r = static_cast<double>(pt.tp) / static_cast<double>(pos);
    const double p =
        static_cast<double>(pt.tp) / static_cast<double>(pt.tp + pt.fp);
    best = std::max(best, f_beta(r, p, beta));
    found = true;
  }
  if (!found) {
    throw Error(ErrorCode::kUndefinedScore,
                "no cutpoint with tp > 0 to score");
  }
  return best;
}

std::string_view score_kind_name(ScoreKind kind) noexcept {
  switch (kind) {
    case ScoreKind::kAucnpr: return "aucnpr";
    case ScoreKind::kRandomNormalizedAucpr: return "random_normalized_aucpr";
    case ScoreKind::kFBeta: return "f_beta";
    case ScoreKind::kModifiedF1: return "modified_f1";
  }
  return "unknown";
}

ScoreValue::ScoreValue(ScoreKind kind, double value, double skew,
                       RecallRange range)
    : kind(kind), value(value), skew(skew), range(range) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kDomainError, "score value must be finite");
  }
  const bool unit_scale =
      kind == ScoreKind::kAucnpr || kind == ScoreKind::kModifiedF1;
  if (unit_scale && (value < 0.0 || value > 1.0)) {
    throw Error(ErrorCode::kDomainError,
                std::string(score_kind_name(kind)) +
                    " values must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace prspace
