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

#ifndef PRSPACE_IO_HPP_
#define PRSPACE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "prspace/aggregate.hpp"
#include "prspace/sampling.hpp"
#include "prspace/types.hpp"

namespace prspace {

/// Parses the comma-delimited prediction format: a mandatory header naming
/// some of label, score, fold, task (label and score required, nothing else
/// allowed), then one record per line. Labels must be 0 or 1 and scores
/// finite; violations throw ParseError with the 1-based line number.
ScoredDataset parse_predictions(std::istream& in,
                                std::string_view source_name = "<input>");

ScoredDataset read_prediction_file(const std::filesystem::path& path);

/// Number formatting used by every emitter. The default prints 6 significant
/// digits; 17 round-trips doubles exactly.
struct FloatFormat {
  int significant_digits = 6;
};

constexpr FloatFormat full_precision() noexcept { return FloatFormat{17}; }

std::string format_double(double value, const FloatFormat& fmt = {});

enum class OutputFormat { kJson, kCsv };

/// JSON object with keys pos, neg, skew, aucpr, aucpr_min, aucnpr, ap,
/// ap_min, range (an object with lo and hi), plus group and f1 when set.
std::string report_to_json(const MetricsReport& report, const FloatFormat& fmt = {});

/// Single CSV row under a fixed header mirroring the JSON keys; the range is
/// rendered as "lo:hi".
std::string report_to_csv(const MetricsReport& report, const FloatFormat& fmt = {});

/// Inverse of report_to_json. Derived fields (balance, aucpr_max) are
/// rebuilt from the serialized values.
MetricsReport report_from_json(const std::string& text);

std::string aggregate_to_json(const AggregateReport& report,
                              const FloatFormat& fmt = {});

/// Per-group table in the layout used for task aggregation: group, aucpr,
/// aucnpr rows followed by a mean row (and a merged row when present).
std::string aggregate_to_csv(const AggregateReport& report,
                             const FloatFormat& fmt = {});

std::string sweep_to_json(std::span<const SweepRow> rows, const FloatFormat& fmt = {});

/// Ratio-sweep table: ratio, seed, then downsampled and original-skew
/// aucpr/aucnpr columns.
std::string sweep_to_csv(std::span<const SweepRow> rows, const FloatFormat& fmt = {});

/// Writes text to the path, throwing WriteError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace prspace

#endif  // PRSPACE_IO_HPP_
