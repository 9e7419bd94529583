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

#include "prspace/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "prspace/curves.hpp"
#include "prspace/scores.hpp"

namespace prspace {

MetricsReport compute_metrics(const ScoredDataset& data, const RecallRange& range,
                              std::optional<double> beta, std::string group) {
  const PRCurve curve = pr_curve(data);
  const double skew = curve.skew();
  const AreaResult area = aucpr(curve, range);
  return MetricsReport{
      .group = std::move(group),
      .balance = curve.balance(),
      .skew = skew,
      .aucpr = area.value,
      .aucpr_min = aucpr_min_range(skew, range),
      .aucpr_max = range.width(),
      .aucnpr = aucnpr(area.value, skew, range),
      .ap = average_precision(data),
      .ap_min = ap_min(curve.balance().pos(), curve.balance().neg()),
      .range = range,
      .f1 = beta ? std::optional<double>(max_f_beta(curve, *beta)) : std::nullopt,
  };
}

std::vector<MetricsReport> group_metrics(const ScoredDataset& data, GroupBy by,
                                         const RecallRange& range) {
  const char* key_name = by == GroupBy::kFold ? "fold" : "task";
  std::map<std::string, std::vector<ScoredRecord>> groups;  // sorted by id
  for (std::size_t i = 0; i < data.records().size(); ++i) {
    const ScoredRecord& rec = data.records()[i];
    const auto& id = by == GroupBy::kFold ? rec.fold : rec.task;
    if (!id.has_value() || id->empty()) {
      throw Error(ErrorCode::kDomainError,
                  "record " + std::to_string(i) + " carries no " + key_name +
                      " identifier; grouping by " + key_name +
                      " needs one on every record");
    }
    groups[*id].push_back(rec);
  }

  std::vector<MetricsReport> reports;
  reports.reserve(groups.size());
  for (auto& [id, records] : groups) {
    ScoredDataset member(std::move(records));
    if (!member.has_both_classes()) {
      throw Error(ErrorCode::kDegenerateGroup,
                  std::string(key_name) + " '" + id +
                      "' needs at least one positive and one negative example "
                      "(got " +
                      std::to_string(member.positives()) + " positive, " +
                      std::to_string(member.negatives()) + " negative)");
    }
    reports.push_back(compute_metrics(member, range, std::nullopt, id));
  }
  return reports;
}

AggregateReport mean_scores(std::vector<MetricsReport> reports,
                            const MeanOptions& options) {
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no reports to aggregate");
  }
  double aucpr_acc = 0.0;
  double aucnpr_acc = 0.0;
  double weight_acc = 0.0;
  double skew_min = reports.front().skew;
  double skew_max = reports.front().skew;
  for (const MetricsReport& report : reports) {
    const double w =
        options.weighted ? static_cast<double>(report.balance.total()) : 1.0;
    aucpr_acc += w * report.aucpr;
    aucnpr_acc += w * report.aucnpr;
    weight_acc += w;
    skew_min = std::min(skew_min, report.skew);
    skew_max = std::max(skew_max, report.skew);
  }
  return AggregateReport{
      .groups = std::move(reports),
      .mean_aucpr = aucpr_acc / weight_acc,
      .mean_aucnpr = aucnpr_acc / weight_acc,
      .skew_min = skew_min,
      .skew_max = skew_max,
      .skew_spread_flagged = skew_max - skew_min > options.skew_warn_threshold,
      .skew_warn_threshold = options.skew_warn_threshold,
      .merged = std::nullopt,
  };
}

MetricsReport merged_metrics(const ScoredDataset& data, const RecallRange& range) {
  return compute_metrics(data, range, std::nullopt, "merged");
}

}  // namespace prspace
