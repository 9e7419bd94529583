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

#include "prspace/types.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace prspace {

ClassBalance::ClassBalance(std::int64_t pos, std::int64_t neg)
    : pos_(pos), neg_(neg) {
  if (pos < 0 || neg < 0) {
    throw Error(ErrorCode::kDomainError,
                "class counts must be nonnegative, got pos=" +
                    std::to_string(pos) + " neg=" + std::to_string(neg));
  }
  if (pos + neg == 0) {
    throw Error(ErrorCode::kEmptyDataset, "pos + neg must be positive");
  }
}

ConfusionMatrix validate_confusion(std::int64_t tp, std::int64_t fp,
                                   std::int64_t fn, std::int64_t tn) {
  if (tp < 0 || fp < 0 || fn < 0 || tn < 0) {
    throw Error(ErrorCode::kNegativeCell,
                "confusion matrix cells must be nonnegative, got (" +
                    std::to_string(tp) + ", " + std::to_string(fp) + ", " +
                    std::to_string(fn) + ", " + std::to_string(tn) + ")");
  }
  if (tp + fp + fn + tn == 0) {
    throw Error(ErrorCode::kEmptyDataset, "all confusion matrix cells are zero");
  }
  return ConfusionMatrix(tp, fp, fn, tn);
}

PRPoint::PRPoint(double recall, double precision)
    : recall(recall), precision(precision) {
  if (!std::isfinite(recall) || recall < 0.0 || recall > 1.0 ||
      !std::isfinite(precision) || precision < 0.0 || precision > 1.0) {
    throw Error(ErrorCode::kDomainError,
                "PR coordinates must be finite and within [0, 1]");
  }
}

PRPoint pr_point(const ConfusionMatrix& cm) {
  if (cm.balance().pos() == 0) {
    throw Error(ErrorCode::kNoPositives,
                "recall is undefined without positive examples");
  }
  if (cm.tp() == 0 && cm.fp() == 0) {
    throw Error(ErrorCode::kUndefinedPrecision,
                "precision is undefined when tp = fp = 0");
  }
  const double recall =
      static_cast<double>(cm.tp()) / static_cast<double>(cm.balance().pos());
  // tp = 0 with fp > 0 is the fp-fixed limit of tp/(tp+fp): exactly 0.
  const double precision =
      cm.tp() == 0 ? 0.0
                   : static_cast<double>(cm.tp()) /
                         static_cast<double>(cm.tp() + cm.fp());
  return PRPoint(recall, precision);
}

ScoredDataset::ScoredDataset(std::vector<ScoredRecord> records)
    : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const ScoredRecord& rec = records_[i];
    if (rec.label != 0 && rec.label != 1) {
      throw Error(ErrorCode::kDomainError,
                  "record " + std::to_string(i) + ": label must be 0 or 1, got " +
                      std::to_string(rec.label));
    }
    if (!std::isfinite(rec.score)) {
      throw Error(ErrorCode::kDomainError,
                  "record " + std::to_string(i) + ": score must be finite");
    }
    if (rec.label == 1) {
      ++positives_;
    } else {
      ++negatives_;
    }
  }
}

Cutpoints::Cutpoints(ClassBalance balance, std::vector<CountPoint> points)
    : balance_(balance), points_(std::move(points)) {
  if (points_.size() < 2 || points_.front() != CountPoint{0, 0}) {
    throw Error(ErrorCode::kDomainError,
                "cutpoints must start at (0, 0) and contain at least one step");
  }
  if (points_.back().tp != balance_.pos() || points_.back().fp != balance_.neg()) {
    throw Error(ErrorCode::kDomainError, "cutpoints must end at (pos, neg)");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const CountPoint& prev = points_[i - 1];
    const CountPoint& cur = points_[i];
    if (cur.tp < prev.tp || cur.fp < prev.fp ||
        (cur.tp == prev.tp && cur.fp == prev.fp)) {
      throw Error(ErrorCode::kDomainError,
                  "cutpoints must advance tp + fp at every step");
    }
  }
}

Cutpoints cutpoints(const ScoredDataset& data) {
  if (!data.has_both_classes()) {
    throw Error(ErrorCode::kDegenerateDataset,
                "curve construction needs at least one positive and one "
                "negative example (got " +
                    std::to_string(data.positives()) + " positive, " +
                    std::to_string(data.negatives()) + " negative)");
  }

  std::vector<std::pair<double, int>> ranked;  // (score, label)
  ranked.reserve(data.size());
  for (const ScoredRecord& rec : data.records()) {
    ranked.emplace_back(rec.score, rec.label);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<CountPoint> points;
  points.push_back({0, 0});
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::size_t i = 0;
  while (i < ranked.size()) {
    const double threshold = ranked[i].first;
    // Consume the whole tie group; within-group order is irrelevant.
    for (; i < ranked.size() && ranked[i].first == threshold; ++i) {
      (ranked[i].second == 1 ? tp : fp) += 1;
    }
    points.push_back({tp, fp});
  }
  return Cutpoints(data.balance(), std::move(points));
}

}  // namespace prspace
