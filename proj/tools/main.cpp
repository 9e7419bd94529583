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

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "prspace/prspace.hpp"

namespace {

using prspace::FloatFormat;
using prspace::OutputFormat;
using prspace::RecallRange;

struct CommonOptions {
  std::string recall_range = "0:1";
  std::string format = "json";
  std::string output;
  bool full_precision = false;

  FloatFormat float_format() const {
    return full_precision ? prspace::full_precision() : FloatFormat{};
  }
  OutputFormat output_format() const {
    return format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  }
};

RecallRange parse_recall_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw prspace::Error(prspace::ErrorCode::kParseError,
                         "recall range must look like a:b, got '" + text + "'");
  }
  char* end = nullptr;
  const std::string lo_text = text.substr(0, colon);
  const std::string hi_text = text.substr(colon + 1);
  const double lo = std::strtod(lo_text.c_str(), &end);
  if (end != lo_text.c_str() + lo_text.size() || lo_text.empty()) {
    throw prspace::Error(prspace::ErrorCode::kParseError,
                         "invalid recall range bound '" + lo_text + "'");
  }
  const double hi = std::strtod(hi_text.c_str(), &end);
  if (end != hi_text.c_str() + hi_text.size() || hi_text.empty()) {
    throw prspace::Error(prspace::ErrorCode::kParseError,
                         "invalid recall range bound '" + hi_text + "'");
  }
  return RecallRange(lo, hi);
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    prspace::write_text_file(opts.output, text);
  }
}

double rounded(double value, const FloatFormat& fmt) {
  return std::strtod(prspace::format_double(value, fmt).c_str(), nullptr);
}

void add_common_flags(CLI::App* cmd, CommonOptions* opts, bool with_format = true) {
  cmd->add_option("--recall-range", opts->recall_range,
                  "Recall interval a:b to integrate over (default 0:1)");
  if (with_format) {
    cmd->add_option("--format", opts->format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--full-precision", opts->full_precision,
                  "Print full double precision instead of 6 significant digits");
  }
  cmd->add_option("--output", opts->output, "Write to this file instead of stdout");
}

int run_analyze(const std::string& input, const CommonOptions& opts,
                const std::optional<double>& beta) {
  const prspace::ScoredDataset data = prspace::read_prediction_file(input);
  const prspace::MetricsReport report =
      prspace::compute_metrics(data, parse_recall_range(opts.recall_range), beta);
  emit(opts, opts.output_format() == OutputFormat::kCsv
                 ? prspace::report_to_csv(report, opts.float_format())
                 : prspace::report_to_json(report, opts.float_format()));
  return 0;
}

int run_aggregate(const std::string& input, const std::string& group_by,
                  bool merged, bool weighted, double skew_warn,
                  const CommonOptions& opts) {
  const prspace::ScoredDataset data = prspace::read_prediction_file(input);
  const RecallRange range = parse_recall_range(opts.recall_range);
  const prspace::GroupBy by =
      group_by == "task" ? prspace::GroupBy::kTask : prspace::GroupBy::kFold;
  prspace::AggregateReport report = prspace::mean_scores(
      prspace::group_metrics(data, by, range),
      prspace::MeanOptions{.weighted = weighted, .skew_warn_threshold = skew_warn});
  if (merged) {
    report.merged = prspace::merged_metrics(data, range);
  }
  if (report.skew_spread_flagged) {
    std::cerr << "prspace: warning: group skews spread from "
              << prspace::format_double(report.skew_min) << " to "
              << prspace::format_double(report.skew_max)
              << "; the means mix different unachievable regions\n";
  }
  emit(opts, opts.output_format() == OutputFormat::kCsv
                 ? prspace::aggregate_to_csv(report, opts.float_format())
                 : prspace::aggregate_to_json(report, opts.float_format()));
  return 0;
}

int run_downsample(const std::string& input,
                   const std::vector<std::string>& ratio_texts,
                   const std::vector<std::uint64_t>& seeds,
                   const CommonOptions& opts) {
  const prspace::ScoredDataset data = prspace::read_prediction_file(input);
  std::vector<prspace::Ratio> ratios;
  ratios.reserve(ratio_texts.size());
  for (const std::string& text : ratio_texts) {
    ratios.push_back(prspace::Ratio::parse(text));
  }
  const auto rows = prspace::ratio_sweep(data, ratios, seeds,
                                         parse_recall_range(opts.recall_range));
  emit(opts, opts.output_format() == OutputFormat::kCsv
                 ? prspace::sweep_to_csv(rows, opts.float_format())
                 : prspace::sweep_to_json(rows, opts.float_format()));
  return 0;
}

int run_bounds(const std::optional<double>& skew_opt,
               const std::optional<std::int64_t>& pos,
               const std::optional<std::int64_t>& neg,
               const std::optional<double>& recall, const CommonOptions& opts) {
  if (!skew_opt.has_value() && !(pos.has_value() && neg.has_value())) {
    throw prspace::Error(prspace::ErrorCode::kDomainError,
                         "bounds needs --skew or both --pos and --neg");
  }
  const double skew = skew_opt.has_value()
                          ? *skew_opt
                          : prspace::ClassBalance(*pos, *neg).skew();
  const RecallRange range = parse_recall_range(opts.recall_range);
  const FloatFormat fmt = opts.float_format();

  nlohmann::ordered_json j;
  j["skew"] = rounded(skew, fmt);
  if (pos.has_value() && neg.has_value()) {
    j["pos"] = *pos;
    j["neg"] = *neg;
  }
  j["aucpr_min"] = rounded(prspace::aucpr_min(skew), fmt);
  if (!range.is_full()) {
    j["range"] = {{"lo", rounded(range.lo(), fmt)}, {"hi", rounded(range.hi(), fmt)}};
    j["aucpr_min_range"] = rounded(prspace::aucpr_min_range(skew, range), fmt);
  }
  if (recall.has_value()) {
    j["recall"] = rounded(*recall, fmt);
    j["min_precision"] = rounded(prspace::min_precision(*recall, skew), fmt);
  }
  if (pos.has_value() && neg.has_value()) {
    j["ap_min"] = rounded(prspace::ap_min(*pos, *neg), fmt);
  }

  if (opts.output_format() == OutputFormat::kCsv) {
    std::string header;
    std::string row;
    for (const auto& [key, value] : j.items()) {
      if (key == "range") {
        continue;
      }
      header += (header.empty() ? "" : ",") + key;
      row += (row.empty() ? "" : ",") + value.dump();
    }
    if (!range.is_full()) {
      header += ",range";
      row += "," + prspace::format_double(range.lo(), fmt) + ":" +
             prspace::format_double(range.hi(), fmt);
    }
    emit(opts, header + "\n" + row + "\n");
  } else {
    emit(opts, j.dump(2) + "\n");
  }
  return 0;
}

int run_plot(const std::vector<std::string>& inputs,
             const std::vector<double>& skews, double grid_step,
             const std::string& output, const CommonOptions& opts) {
  prspace::PlotSpec spec;
  spec.range = parse_recall_range(opts.recall_range);
  spec.grid_step = grid_step;
  spec.extra_skews = skews;
  for (const std::string& input : inputs) {
    const prspace::ScoredDataset data = prspace::read_prediction_file(input);
    spec.curves.push_back(
        {std::filesystem::path(input).stem().string(), prspace::pr_curve(data)});
  }
  prspace::write_svg_file(spec, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Precision-recall analysis with explicit achievability bounds"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Metrics report (AUCPR, AUCNPR, AP and their floors) for one "
                 "prediction file");
  std::string analyze_input;
  CommonOptions analyze_opts;
  double analyze_beta = 1.0;
  analyze->add_option("--input", analyze_input, "Prediction CSV file")
      ->required();
  auto* beta_opt = analyze->add_option(
      "--beta", analyze_beta,
      "Also report the best F_beta over the ranking's thresholds");
  add_common_flags(analyze, &analyze_opts);

  // plot
  auto* plot = app.add_subcommand(
      "plot", "SVG of PR curves, always with the minimum PR curve and the "
              "unachievable region per skew");
  std::vector<std::string> plot_inputs;
  std::vector<double> plot_skews;
  double plot_grid_step = 0.01;
  CommonOptions plot_opts;
  plot->add_option("--input", plot_inputs, "Prediction CSV files to draw");
  plot->add_option("--skew", plot_skews,
                   "Extra skews whose minimum curves are drawn without data");
  plot->add_option("--grid-step", plot_grid_step,
                   "Sampling resolution of the drawn curves (default 0.01)");
  add_common_flags(plot, &plot_opts, /*with_format=*/false);

  // aggregate
  auto* aggregate = app.add_subcommand(
      "aggregate", "Per-fold or per-task metrics with skew-aware means");
  std::string aggregate_input;
  std::string aggregate_group_by = "fold";
  bool aggregate_merged = false;
  bool aggregate_weighted = false;
  double aggregate_skew_warn = 0.05;
  CommonOptions aggregate_opts;
  aggregate->add_option("--input", aggregate_input, "Prediction CSV file")
      ->required();
  aggregate->add_option("--group-by", aggregate_group_by, "Grouping column")
      ->check(CLI::IsMember({"fold", "task"}));
  aggregate->add_flag("--merged", aggregate_merged,
                      "Also score the pooled records as one merged data set");
  aggregate->add_flag("--weighted", aggregate_weighted,
                      "Weight the means by group size");
  aggregate->add_option("--skew-warn", aggregate_skew_warn,
                        "Warn when group skews spread further than this");
  add_common_flags(aggregate, &aggregate_opts);

  // downsample
  auto* downsample = app.add_subcommand(
      "downsample",
      "Sweep negative-downsampling ratios and score each downsampled set");
  std::string downsample_input;
  std::vector<std::string> downsample_ratios;
  std::vector<std::uint64_t> downsample_seeds = {0};
  CommonOptions downsample_opts;
  downsample->add_option("--input", downsample_input, "Prediction CSV file")
      ->required();
  downsample
      ->add_option("--ratio", downsample_ratios,
                   "Target pos:neg ratio (repeatable)")
      ->required();
  downsample
      ->add_option("--seeds", downsample_seeds,
                   "Sampling seeds (default 0)")
      ->delimiter(',');
  add_common_flags(downsample, &downsample_opts);

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "Print the achievability bounds for a skew or class counts");
  CommonOptions bounds_opts;
  double bounds_skew = 0.0;
  std::int64_t bounds_pos = 0;
  std::int64_t bounds_neg = 0;
  double bounds_recall = 0.0;
  auto* skew_opt = bounds->add_option("--skew", bounds_skew, "Class skew in (0, 1)");
  auto* pos_opt = bounds->add_option("--pos", bounds_pos, "Positive count");
  auto* neg_opt = bounds->add_option("--neg", bounds_neg, "Negative count");
  auto* recall_opt = bounds->add_option(
      "--recall", bounds_recall, "Also print the minimum precision at this recall");
  add_common_flags(bounds, &bounds_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "prspace: [UsageError] " << e.what() << "\n";
    const int code = e.get_exit_code();
    return code == 0 ? 1 : code;
  }

  try {
    if (analyze->parsed()) {
      return run_analyze(analyze_input, analyze_opts,
                         beta_opt->count() > 0
                             ? std::optional<double>(analyze_beta)
                             : std::nullopt);
    }
    if (plot->parsed()) {
      if (plot_opts.output.empty()) {
        throw prspace::Error(prspace::ErrorCode::kDomainError,
                             "plot needs --output for the SVG file");
      }
      return run_plot(plot_inputs, plot_skews, plot_grid_step, plot_opts.output,
                      plot_opts);
    }
    if (aggregate->parsed()) {
      return run_aggregate(aggregate_input, aggregate_group_by, aggregate_merged,
                           aggregate_weighted, aggregate_skew_warn,
                           aggregate_opts);
    }
    if (downsample->parsed()) {
      return run_downsample(downsample_input, downsample_ratios,
                            downsample_seeds, downsample_opts);
    }
    if (bounds->parsed()) {
      return run_bounds(skew_opt->count() > 0 ? std::optional<double>(bounds_skew)
                                              : std::nullopt,
                        pos_opt->count() > 0
                            ? std::optional<std::int64_t>(bounds_pos)
                            : std::nullopt,
                        neg_opt->count() > 0
                            ? std::optional<std::int64_t>(bounds_neg)
                            : std::nullopt,
                        recall_opt->count() > 0
                            ? std::optional<double>(bounds_recall)
                            : std::nullopt,
                        bounds_opts);
    }
  } catch (const prspace::Error& err) {
    std::cerr << "prspace: [" << err.category() << "] " << err.message() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "prspace: [InternalError] " << err.what() << "\n";
    return 1;
  }
  return 0;
}
