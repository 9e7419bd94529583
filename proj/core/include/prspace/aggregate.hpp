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

#ifndef PRSPACE_AGGREGATE_HPP_
#define PRSPACE_AGGREGATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "prspace/bounds.hpp"
#include "prspace/types.hpp"

namespace prspace {

/// Metrics of one evaluation (one fold, one task, or one merged data set),
/// all computed against the group's own skew.
struct MetricsReport {
  std::string group;  // empty for a single, ungrouped evaluation
  ClassBalance balance;
  double skew;
  double aucpr;
  double aucpr_min;
  double aucpr_max;
  double aucnpr;
  double ap;
  double ap_min;
  RecallRange range;
  std::optional<double> f1;  // best f_beta over the ranking, when requested
};

/// Computes a full MetricsReport for one data set. When `beta` is given the
/// report carries the best f_beta over the ranking's cutpoints.
MetricsReport compute_metrics(const ScoredDataset& data, const RecallRange& range,
                              std::optional<double> beta = std::nullopt,
                              std::string group = {});

enum class GroupBy { kFold, kTask };

/// One report per group, ordered by group id. Every record must carry the
/// requested identifier and every group needs both classes; a single-class
/// group throws DegenerateGroup naming it.
std::vector<MetricsReport> group_metrics(const ScoredDataset& data, GroupBy by,
                                         const RecallRange& range);

struct MeanOptions {
  bool weighted = false;  // weight groups by example count instead of equally
  double skew_warn_threshold = 0.05;
};

/// Per-group reports plus their summary means. A large skew spread between
/// groups means the means mix different unachievable regions; the flag
/// records when the spread exceeds the configured threshold.
struct AggregateReport {
  std::vector<MetricsReport> groups;
  double mean_aucpr;
  double mean_aucnpr;
  double skew_min;
  double skew_max;
  bool skew_spread_flagged;
  double skew_warn_threshold;
  std::optional<MetricsReport> merged;
};

/// Means of aucpr and aucnpr across reports (unweighted unless configured).
/// Throws EmptyInput on an empty list.
AggregateReport mean_scores(std::vector<MetricsReport> reports,
                            const MeanOptions& options = {});

/// One report over the union of all records, using the pooled skew. Sound
/// only when scores are comparable across groups (calibrated models); the
/// result depends on the pooled multiset of (label, score) alone, not on
/// how records were partitioned.
MetricsReport merged_metrics(const ScoredDataset& data, const RecallRange& range);

}  // namespace prspace

#endif  // PRSPACE_AGGREGATE_HPP_
