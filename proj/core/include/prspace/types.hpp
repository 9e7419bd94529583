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

#ifndef PRSPACE_TYPES_HPP_
#define PRSPACE_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prspace/errors.hpp"

namespace prspace {

/// Positive/negative example counts of a data set and the derived class
/// skew pi = pos / (pos + neg). At least one example is required.
class ClassBalance {
 public:
  ClassBalance(std::int64_t pos, std::int64_t neg);

  std::int64_t pos() const noexcept { return pos_; }
  std::int64_t neg() const noexcept { return neg_; }
  std::int64_t total() const noexcept { return pos_ + neg_; }

  /// Proportion of positives, in [0, 1].
  double skew() const noexcept {
    return static_cast<double>(pos_) / static_cast<double>(total());
  }

  friend bool operator==(const ClassBalance&, const ClassBalance&) = default;

 private:
  std::int64_t pos_;
  std::int64_t neg_;
};

/// A validated confusion matrix: all cells nonnegative, tp + fn = pos and
/// fp + tn = neg. Construct through validate_confusion().
class ConfusionMatrix {
 public:
  std::int64_t tp() const noexcept { return tp_; }
  std::int64_t fp() const noexcept { return fp_; }
  std::int64_t fn() const noexcept { return fn_; }
  std::int64_t tn() const noexcept { return tn_; }
  const ClassBalance& balance() const noexcept { return balance_; }

 private:
  friend ConfusionMatrix validate_confusion(std::int64_t tp, std::int64_t fp,
                                            std::int64_t fn, std::int64_t tn);
  ConfusionMatrix(std::int64_t tp, std::int64_t fp, std::int64_t fn,
                  std::int64_t tn)
      : tp_(tp), fp_(fp), fn_(fn), tn_(tn), balance_(tp + fn, fp + tn) {}

  std::int64_t tp_, fp_, fn_, tn_;
  ClassBalance balance_;
};

/// Checks cell counts and derives the balance (pos = tp + fn, neg = fp + tn).
/// Throws NegativeCell for any negative count, EmptyDataset if all four are 0.
ConfusionMatrix validate_confusion(std::int64_t tp, std::int64_t fp,
                                   std::int64_t fn, std::int64_t tn);

/// A point in precision-recall space; both coordinates finite and in [0, 1].
struct PRPoint {
  PRPoint(double recall, double precision);

  double recall;
  double precision;

  friend bool operator==(const PRPoint&, const PRPoint&) = default;
};

/// The PR point of a confusion matrix: recall = tp/pos, precision =
/// tp/(tp+fp). Precision is 0 when tp = 0 and fp > 0 (the fp-fixed limit);
/// tp = fp = 0 throws UndefinedPrecision, pos = 0 throws NoPositives.
PRPoint pr_point(const ConfusionMatrix& cm);

/// One labeled, scored example. Scores are used only ordinally; fold and
/// task identifiers drive grouped evaluation when present.
struct ScoredRecord {
  int label = 0;       // 1 = positive, 0 = negative
  double score = 0.0;  // must be finite
  std::optional<std::string> fold;
  std::optional<std::string> task;

  friend bool operator==(const ScoredRecord&, const ScoredRecord&) = default;
};

/// An immutable collection of scored records. Construction validates labels
/// and score finiteness; class counts are cached.
class ScoredDataset {
 public:
  explicit ScoredDataset(std::vector<ScoredRecord> records);

  const std::vector<ScoredRecord>& records() const noexcept {
    return records_;
  }
  std::size_t size() const noexcept { return records_.size(); }
  std::int64_t positives() const noexcept { return positives_; }
  std::int64_t negatives() const noexcept { return negatives_; }
  bool has_both_classes() const noexcept {
    return positives_ > 0 && negatives_ > 0;
  }

  /// Throws EmptyDataset when there are no records.
  ClassBalance balance() const { return ClassBalance(positives_, negatives_); }

 private:
  std::vector<ScoredRecord> records_;
  std::int64_t positives_ = 0;
  std::int64_t negatives_ = 0;
};

/// Cumulative counts after one distinct-score threshold of a ranking.
struct CountPoint {
  std::int64_t tp = 0;
  std::int64_t fp = 0;

  friend bool operator==(const CountPoint&, const CountPoint&) = default;
};

/// The count-space cutpoints of a ranking: a sequence of (tp, fp) pairs from
/// (0, 0) to (pos, neg), nondecreasing in both coordinates with no repeats.
class Cutpoints {
 public:
  Cutpoints(ClassBalance balance, std::vector<CountPoint> points);

  const ClassBalance& balance() const noexcept { return balance_; }
  const std::vector<CountPoint>& points() const noexcept { return points_; }

 private:
  ClassBalance balance_;
  std::vector<CountPoint> points_;
};

/// Sweeps the ranking by descending score and emits the cumulative (tp, fp)
/// after each tie group, prepended with (0, 0). Tied scores collapse into a
/// single cutpoint, so the result is invariant to input order. Throws
/// DegenerateDataset unless both classes are present.
Cutpoints cutpoints(const ScoredDataset& data);

}  // namespace prspace

#endif  // PRSPACE_TYPES_HPP_
