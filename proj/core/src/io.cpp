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

#include "prspace/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace prspace {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

[[noreturn]] void parse_fail(std::string_view source, std::size_t line,
                             const std::string& what) {
  throw Error(ErrorCode::kParseError, std::string(source) + ": line " +
                                          std::to_string(line) + ": " + what);
}

// Rounds through the textual representation so emitted numbers and the
// values a reader parses back agree exactly.
double rounded(double value, const FloatFormat& fmt) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", fmt.significant_digits,
                value == 0.0 ? 0.0 : value);
  return std::strtod(buffer, nullptr);
}

ordered_json range_json(const RecallRange& range, const FloatFormat& fmt) {
  ordered_json j;
  j["lo"] = rounded(range.lo(), fmt);
  j["hi"] = rounded(range.hi(), fmt);
  return j;
}

ordered_json report_json(const MetricsReport& report, const FloatFormat& fmt) {
  ordered_json j;
  if (!report.group.empty()) {
    j["group"] = report.group;
  }
  j["pos"] = report.balance.pos();
  j["neg"] = report.balance.neg();
  j["skew"] = rounded(report.skew, fmt);
  j["aucpr"] = rounded(report.aucpr, fmt);
  j["aucpr_min"] = rounded(report.aucpr_min, fmt);
  j["aucnpr"] = rounded(report.aucnpr, fmt);
  j["ap"] = rounded(report.ap, fmt);
  j["ap_min"] = rounded(report.ap_min, fmt);
  j["range"] = range_json(report.range, fmt);
  if (report.f1.has_value()) {
    j["f1"] = rounded(*report.f1, fmt);
  }
  return j;
}

std::string csv_quote(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string range_text(const RecallRange& range, const FloatFormat& fmt) {
  return format_double(range.lo(), fmt) + ":" + format_double(range.hi(), fmt);
}

}  // namespace

ScoredDataset parse_predictions(std::istream& in, std::string_view source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kParseError,
                std::string(source_name) + ": missing header row");
  }

  // Column layout comes from the header; only label, score, fold and task
  // are recognized, and label and score must both be present.
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::size_t label_col = kAbsent;
  std::size_t score_col = kAbsent;
  std::size_t fold_col = kAbsent;
  std::size_t task_col = kAbsent;
  const std::vector<std::string_view> header = split_fields(line);
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string_view name = header[i];
    std::size_t* slot = nullptr;
    if (name == "label") {
      slot = &label_col;
    } else if (name == "score") {
      slot = &score_col;
    } else if (name == "fold") {
      slot = &fold_col;
    } else if (name == "task") {
      slot = &task_col;
    } else {
      parse_fail(source_name, 1, "unknown column '" + std::string(name) + "'");
    }
    if (*slot != kAbsent) {
      parse_fail(source_name, 1, "duplicate column '" + std::string(name) + "'");
    }
    *slot = i;
  }
  if (label_col == kAbsent || score_col == kAbsent) {
    parse_fail(source_name, 1, "header must name both label and score");
  }

  std::vector<ScoredRecord> records;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) {
      continue;
    }
    const std::vector<std::string_view> fields = split_fields(line);
    if (fields.size() != header.size()) {
      parse_fail(source_name, line_number,
                 "expected " + std::to_string(header.size()) + " fields, got " +
                     std::to_string(fields.size()));
    }

    ScoredRecord record;
    const std::string_view label = fields[label_col];
    if (label == "0") {
      record.label = 0;
    } else if (label == "1") {
      record.label = 1;
    } else {
      parse_fail(source_name, line_number,
                 "label must be 0 or 1, got '" + std::string(label) + "'");
    }

    const std::string_view score = fields[score_col];
    const auto* end = score.data() + score.size();
    const auto result = std::from_chars(score.data(), end, record.score);
    if (result.ec == std::errc::invalid_argument || result.ptr != end ||
        score.empty()) {
      parse_fail(source_name, line_number,
                 "invalid score '" + std::string(score) + "'");
    }
    if (result.ec == std::errc::result_out_of_range ||
        !std::isfinite(record.score)) {
      parse_fail(source_name, line_number,
                 "non-finite score '" + std::string(score) + "'");
    }

    if (fold_col != kAbsent && !fields[fold_col].empty()) {
      record.fold = std::string(fields[fold_col]);
    }
    if (task_col != kAbsent && !fields[task_col].empty()) {
      record.task = std::string(fields[task_col]);
    }
    records.push_back(std::move(record));
  }
  return ScoredDataset(std::move(records));
}

ScoredDataset read_prediction_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError,
                "cannot open '" + path.string() + "' for reading");
  }
  return parse_predictions(in, path.string());
}

std::string format_double(double value, const FloatFormat& fmt) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", fmt.significant_digits,
                value == 0.0 ? 0.0 : value);
  return buffer;
}

std::string report_to_json(const MetricsReport& report, const FloatFormat& fmt) {
  return report_json(report, fmt).dump(2) + "\n";
}

std::string report_to_csv(const MetricsReport& report, const FloatFormat& fmt) {
  std::string header;
  std::string row;
  if (!report.group.empty()) {
    header += "group,";
    row += csv_quote(report.group) + ",";
  }
  header += "pos,neg,skew,aucpr,aucpr_min,aucnpr,ap,ap_min,range";
  row += std::to_string(report.balance.pos()) + "," +
         std::to_string(report.balance.neg()) + "," +
         format_double(report.skew, fmt) + "," +
         format_double(report.aucpr, fmt) + "," +
         format_double(report.aucpr_min, fmt) + "," +
         format_double(report.aucnpr, fmt) + "," +
         format_double(report.ap, fmt) + "," +
         format_double(report.ap_min, fmt) + "," + range_text(report.range, fmt);
  if (report.f1.has_value()) {
    header += ",f1";
    row += "," + format_double(*report.f1, fmt);
  }
  return header + "\n" + row + "\n";
}

MetricsReport report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto& range = j.at("range");
    MetricsReport report{
        .group = j.value("group", std::string{}),
        .balance = ClassBalance(j.at("pos").get<std::int64_t>(),
                                j.at("neg").get<std::int64_t>()),
        .skew = j.at("skew").get<double>(),
        .aucpr = j.at("aucpr").get<double>(),
        .aucpr_min = j.at("aucpr_min").get<double>(),
        .aucpr_max = 0.0,
        .aucnpr = j.at("aucnpr").get<double>(),
        .ap = j.at("ap").get<double>(),
        .ap_min = j.at("ap_min").get<double>(),
        .range = RecallRange(range.at("lo").get<double>(),
                             range.at("hi").get<double>()),
        .f1 = std::nullopt,
    };
    report.aucpr_max = report.range.width();
    if (j.contains("f1")) {
      report.f1 = j.at("f1").get<double>();
    }
    return report;
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorCode::kParseError,
                std::string("invalid metrics JSON: ") + err.what());
  }
}

std::string aggregate_to_json(const AggregateReport& report,
                              const FloatFormat& fmt) {
  ordered_json j;
  j["groups"] = ordered_json::array();
  for (const MetricsReport& group : report.groups) {
    j["groups"].push_back(report_json(group, fmt));
  }
  j["mean_aucpr"] = rounded(report.mean_aucpr, fmt);
  j["mean_aucnpr"] = rounded(report.mean_aucnpr, fmt);
  j["skew_min"] = rounded(report.skew_min, fmt);
  j["skew_max"] = rounded(report.skew_max, fmt);
  j["skew_spread_flagged"] = report.skew_spread_flagged;
  j["skew_warn_threshold"] = rounded(report.skew_warn_threshold, fmt);
  if (report.merged.has_value()) {
    j["merged"] = report_json(*report.merged, fmt);
  }
  return j.dump(2) + "\n";
}

std::string aggregate_to_csv(const AggregateReport& report,
                             const FloatFormat& fmt) {
  std::string out = "group,aucpr,aucnpr\n";
  for (const MetricsReport& group : report.groups) {
    out += csv_quote(group.group) + "," + format_double(group.aucpr, fmt) + "," +
           format_double(group.aucnpr, fmt) + "\n";
  }
  out += "mean," + format_double(report.mean_aucpr, fmt) + "," +
         format_double(report.mean_aucnpr, fmt) + "\n";
  if (report.merged.has_value()) {
    out += "merged," + format_double(report.merged->aucpr, fmt) + "," +
           format_double(report.merged->aucnpr, fmt) + "\n";
  }
  return out;
}

std::string sweep_to_json(std::span<const SweepRow> rows, const FloatFormat& fmt) {
  ordered_json j = ordered_json::array();
  for (const SweepRow& row : rows) {
    ordered_json cell;
    cell["ratio"] = row.ratio.str();
    cell["seed"] = row.seed;
    cell["downsampled_aucpr"] = rounded(row.down_aucpr, fmt);
    cell["downsampled_aucnpr"] = rounded(row.down_aucnpr, fmt);
    cell["original_aucpr"] = rounded(row.orig_aucpr, fmt);
    cell["original_aucnpr"] = rounded(row.orig_aucnpr, fmt);
    j.push_back(std::move(cell));
  }
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(std::span<const SweepRow> rows, const FloatFormat& fmt) {
  std::string out =
      "ratio,seed,downsampled_aucpr,downsampled_aucnpr,original_aucpr,"
      "original_aucnpr\n";
  for (const SweepRow& row : rows) {
    out += row.ratio.str() + "," + std::to_string(row.seed) + "," +
           format_double(row.down_aucpr, fmt) + "," +
           format_double(row.down_aucnpr, fmt) + "," +
           format_double(row.orig_aucpr, fmt) + "," +
           format_double(row.orig_aucnpr, fmt) + "\n";
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kWriteError,
                "cannot open '" + path.string() + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kWriteError, "failed writing '" + path.string() + "'");
  }
}

}  // namespace prspace
