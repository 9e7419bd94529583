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

// End-to-end coverage of the installed command-line surface: the tests spawn
// the real binary and inspect its outputs, exit codes and error categories.

#include <sys/wait.h>

#include <cstdlib>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "prspace/prspace.hpp"
#include "support/test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "prspace_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path = work_dir() / ("stdout." + std::to_string(counter));
  const fs::path err_path = work_dir() / ("stderr." + std::to_string(counter));
  ++counter;
  const std::string command = std::string(PRSPACE_CLI_PATH) + " " + args + " >" +
                              out_path.string() + " 2>" + err_path.string();
  const int status = std::system(command.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, slurp(out_path), slurp(err_path)};
}

std::string prediction_rows(const prspace::ScoredDataset& data,
                            const std::string& suffix = "") {
  std::string text;
  for (const prspace::ScoredRecord& rec : data.records()) {
    text += std::to_string(rec.label) + "," +
            prspace::format_double(rec.score, prspace::full_precision()) +
            suffix + "\n";
  }
  return text;
}

// A worst-ranking file: all negatives outscore all positives.
fs::path worst_file(std::int64_t pos, std::int64_t neg) {
  const fs::path path =
      work_dir() / ("worst_" + std::to_string(pos) + "_" + std::to_string(neg) + ".csv");
  const prspace::ScoredDataset data = testsupport::worst_ranking(pos, neg);
  spit(path, "label,score\n" + prediction_rows(data));
  return path;
}

}  // namespace

TEST_CASE("analyze emits the metrics report as JSON") {
  const fs::path input = worst_file(10, 10);
  const RunResult result = run_cli("analyze --input " + input.string());
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["pos"] == 10);
  CHECK(j["neg"] == 10);
  CHECK(j["skew"] == 0.5);
  CHECK(j["aucpr"].get<double>() == doctest::Approx(0.306853).epsilon(1e-6));
  CHECK(j["aucnpr"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(j["range"]["lo"] == 0.0);
  CHECK(j["range"]["hi"] == 1.0);
  CHECK_FALSE(j.contains("f1"));
}

TEST_CASE("analyze honours the recall range, beta and csv format") {
  const fs::path input = worst_file(10, 10);
  const RunResult csv = run_cli("analyze --input " + input.string() +
                                " --recall-range 0.5:1 --beta 1 --format csv");
  REQUIRE(csv.exit_code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "pos,neg,skew,aucpr,aucpr_min,aucnpr,ap,ap_min,range,f1");
  std::string row;
  std::getline(lines, row);
  CHECK(row.find("0.5:1") != std::string::npos);

  const RunResult json = run_cli("analyze --input " + input.string() +
                                 " --recall-range 0.5:1 --beta 1");
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["range"]["lo"] == 0.5);
  CHECK(j["aucpr"].get<double>() ==
        doctest::Approx(prspace::aucpr_min_range(0.5, prspace::RecallRange(0.5, 1.0)))
            .epsilon(1e-6));
  CHECK(j["f1"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("analyze reports parse failures with category and line number") {
  const fs::path bad = work_dir() / "bad.csv";
  spit(bad,
       "label,score\n1,0.9\n0,0.8\n1,0.7\n0,0.6\n1,0.5\n0,nan\n");
  const RunResult result = run_cli("analyze --input " + bad.string());
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("[ParseError]") != std::string::npos);
  CHECK(result.err.find("line 7") != std::string::npos);
  CHECK(result.out.empty());
}

TEST_CASE("usage errors exit nonzero with a category") {
  CHECK(run_cli("").exit_code != 0);
  const RunResult unknown = run_cli("analyze --no-such-flag");
  CHECK(unknown.exit_code != 0);
  CHECK(unknown.err.find("[UsageError]") != std::string::npos);
  const RunResult missing = run_cli("analyze");
  CHECK(missing.exit_code != 0);
}

TEST_CASE("plot writes a deterministic SVG with the mandatory overlay") {
  const fs::path input = worst_file(5, 10);
  const fs::path out = work_dir() / "plot.svg";
  const std::string cmd = "plot --input " + input.string() + " --skew 0.1 --output " +
                          out.string();
  REQUIRE(run_cli(cmd).exit_code == 0);
  const std::string first = slurp(out);
  CHECK(first.rfind("<?xml", 0) == 0);
  // Two overlays: the file's skew 1/3 and the extra 0.1.
  std::size_t overlays = 0;
  for (std::size_t at = first.find("class=\"min-curve\""); at != std::string::npos;
       at = first.find("class=\"min-curve\"", at + 1)) {
    ++overlays;
  }
  CHECK(overlays == 2);

  REQUIRE(run_cli(cmd).exit_code == 0);
  CHECK(slurp(out) == first);  // byte-identical rerun
}

TEST_CASE("plot can draw a family of minimum curves without data") {
  const fs::path out = work_dir() / "family.svg";
  const RunResult result =
      run_cli("plot --skew 0.5 --skew 0.25 --skew 0.1 --output " + out.string());
  REQUIRE(result.exit_code == 0);
  const std::string svg = slurp(out);
  std::size_t overlays = 0;
  for (std::size_t at = svg.find("class=\"min-curve\""); at != std::string::npos;
       at = svg.find("class=\"min-curve\"", at + 1)) {
    ++overlays;
  }
  CHECK(overlays == 3);
  CHECK(run_cli("plot --output " + out.string()).exit_code == 1);
}

TEST_CASE("aggregate groups by fold and appends the mean row") {
  const fs::path input = work_dir() / "folds.csv";
  const prspace::ScoredDataset fold_a = testsupport::perfect_ranking(4, 8);
  const prspace::ScoredDataset fold_b = testsupport::worst_ranking(6, 6);
  spit(input, "label,score,fold\n" + prediction_rows(fold_a, ",a") +
                  prediction_rows(fold_b, ",b"));

  const RunResult csv = run_cli("aggregate --input " + input.string() +
                                " --group-by fold --merged --format csv");
  REQUIRE(csv.exit_code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "group,aucpr,aucnpr");
  std::getline(lines, line);
  CHECK(line.rfind("a,1,1", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("b,0.306853,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("mean,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("merged,", 0) == 0);
  // Fold skews differ (1/3 vs 1/2) beyond the default threshold.
  CHECK(csv.err.find("warning") != std::string::npos);

  const RunResult json =
      run_cli("aggregate --input " + input.string() + " --full-precision");
  const auto j = nlohmann::json::parse(json.out);
  REQUIRE(j["groups"].size() == 2);
  const double mean = (j["groups"][0]["aucpr"].get<double>() +
                       j["groups"][1]["aucpr"].get<double>()) /
                      2.0;
  CHECK(j["mean_aucpr"].get<double>() == doctest::Approx(mean).epsilon(1e-12));
  CHECK(j["skew_spread_flagged"] == true);
}

TEST_CASE("analyze on pooled records equals the merged aggregate") {
  // Same multiset of (label, score), once with fold tags and once without.
  const fs::path grouped = work_dir() / "grouped.csv";
  const fs::path pooled = work_dir() / "pooled.csv";
  std::string grouped_text = "label,score,fold\n";
  std::string pooled_text = "label,score\n";
  std::mt19937_64 rng(2026);
  for (int fold = 0; fold < 3; ++fold) {
    const prspace::ScoredDataset data = testsupport::random_dataset(rng, 10, 25);
    for (const prspace::ScoredRecord& rec : data.records()) {
      const std::string base =
          std::to_string(rec.label) + "," +
          prspace::format_double(rec.score, prspace::full_precision());
      grouped_text += base + ",f" + std::to_string(fold) + "\n";
      pooled_text += base + "\n";
    }
  }
  spit(grouped, grouped_text);
  spit(pooled, pooled_text);

  const RunResult merged = run_cli("aggregate --input " + grouped.string() +
                                   " --merged --full-precision");
  const RunResult direct =
      run_cli("analyze --input " + pooled.string() + " --full-precision");
  REQUIRE(merged.exit_code == 0);
  REQUIRE(direct.exit_code == 0);
  const auto jm = nlohmann::json::parse(merged.out)["merged"];
  const auto jd = nlohmann::json::parse(direct.out);
  for (const char* key : {"pos", "neg", "skew", "aucpr", "aucpr_min", "aucnpr",
                          "ap", "ap_min"}) {
    CHECK(jm[key] == jd[key]);
  }
}

TEST_CASE("downsample sweeps ratios deterministically") {
  const fs::path input = work_dir() / "sweep.csv";
  const prspace::ScoredDataset scored = testsupport::calibrated_scorer(40, 400, 5);
  spit(input, "label,score\n" + prediction_rows(scored));

  const std::string cmd = "downsample --input " + input.string() +
                          " --ratio 1:1 --ratio 1:10 --seeds 0,1 --format csv";
  const RunResult result = run_cli(cmd);
  REQUIRE(result.exit_code == 0);
  std::istringstream lines(result.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "ratio,seed,downsampled_aucpr,downsampled_aucnpr,original_aucpr,"
        "original_aucnpr");
  int rows = 0;
  std::string last;
  while (std::getline(lines, line)) {
    if (!line.empty()) {
      ++rows;
      last = line;
    }
  }
  CHECK(rows == 4);
  // 1:10 is the native ratio: downsampled columns equal the original ones.
  std::istringstream cells(last);
  std::string ratio, seed, da, dn, oa, on;
  std::getline(cells, ratio, ',');
  std::getline(cells, seed, ',');
  std::getline(cells, da, ',');
  std::getline(cells, dn, ',');
  std::getline(cells, oa, ',');
  std::getline(cells, on, ',');
  CHECK(ratio == "1:10");
  CHECK(da == oa);
  CHECK(dn == on);

  CHECK(run_cli(cmd).out == result.out);  // same seeds, same table

  const RunResult infeasible =
      run_cli("downsample --input " + input.string() + " --ratio 1:99");
  CHECK(infeasible.exit_code == 1);
  CHECK(infeasible.err.find("[InsufficientNegatives]") != std::string::npos);
}

TEST_CASE("bounds prints the closed-form floors") {
  const RunResult half = run_cli("bounds --skew 0.5");
  REQUIRE(half.exit_code == 0);
  const auto j = nlohmann::json::parse(half.out);
  CHECK(j["aucpr_min"].get<double>() == doctest::Approx(0.306853).epsilon(1e-6));

  const RunResult counts =
      run_cli("bounds --pos 100 --neg 200 --recall 0.5 --recall-range 0.5:1");
  REQUIRE(counts.exit_code == 0);
  const auto jc = nlohmann::json::parse(counts.out);
  CHECK(jc["skew"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(jc["min_precision"].get<double>() == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(jc["aucpr_min_range"].get<double>() ==
        doctest::Approx(prspace::aucpr_min_range(
                            1.0 / 3.0, prspace::RecallRange(0.5, 1.0)))
            .epsilon(1e-6));
  CHECK(jc.contains("ap_min"));

  const RunResult degenerate = run_cli("bounds --skew 1");
  CHECK(degenerate.exit_code == 1);
  CHECK(degenerate.err.find("[DegenerateSkew]") != std::string::npos);

  const RunResult missing = run_cli("bounds");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("[DomainError]") != std::string::npos);
}

TEST_CASE("output files are written when requested") {
  const fs::path input = worst_file(4, 4);
  const fs::path out = work_dir() / "report.json";
  REQUIRE(run_cli("analyze --input " + input.string() + " --output " +
                  out.string())
              .exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["pos"] == 4);

  const RunResult bad_out = run_cli("analyze --input " + input.string() +
                                    " --output /nonexistent-dir/report.json");
  CHECK(bad_out.exit_code == 1);
  CHECK(bad_out.err.find("[WriteError]") != std::string::npos);
}
