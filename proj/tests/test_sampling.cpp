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

#include "prspace/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "prspace/aggregate.hpp"
#include "support/doctest_helpers.hpp"
#include "support/test_support.hpp"

using namespace prspace;

TEST_CASE("ratio parsing and validation") {
  const Ratio ratio = Ratio::parse("1:24");
  CHECK(ratio.pos_part() == 1);
  CHECK(ratio.neg_part() == 24);
  CHECK(ratio.str() == "1:24");
  CHECK(ratio.skew() == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(Ratio::parse("3:2") == Ratio(3, 2));

  CHECK_ERROR_CODE(Ratio::parse("1-24"), ErrorCode::kParseError);
  CHECK_ERROR_CODE(Ratio::parse("1:"), ErrorCode::kParseError);
  CHECK_ERROR_CODE(Ratio::parse("x:2"), ErrorCode::kParseError);
  CHECK_ERROR_CODE(Ratio::parse("0:2"), ErrorCode::kDomainError);
  CHECK_ERROR_CODE(Ratio(1, 0), ErrorCode::kDomainError);
}

TEST_CASE("downsampling to a target ratio") {
  const ScoredDataset data = testsupport::calibrated_scorer(100, 2400, 1);

  SUBCASE("native ratio keeps the records bit-identical") {
    const ScoredDataset same = downsample_negatives(data, Ratio(1, 24), 9);
    CHECK(same.records() == data.records());
  }

  SUBCASE("1:1 keeps all positives and exactly pos negatives") {
    const ScoredDataset down = downsample_negatives(data, Ratio(1, 1), 7);
    CHECK(down.positives() == 100);
    CHECK(down.negatives() == 100);
    // Same seed reproduces the same subset; another seed differs.
    const ScoredDataset again = downsample_negatives(data, Ratio(1, 1), 7);
    CHECK(again.records() == down.records());
    const ScoredDataset other = downsample_negatives(data, Ratio(1, 1), 8);
    CHECK(other.records() != down.records());
  }

  SUBCASE("retained records keep their original relative order") {
    const ScoredDataset down = downsample_negatives(data, Ratio(1, 3), 5);
    std::size_t cursor = 0;
    for (const ScoredRecord& rec : down.records()) {
      while (cursor < data.records().size() &&
             !(data.records()[cursor] == rec)) {
        ++cursor;
      }
      CHECK(cursor < data.records().size());
      ++cursor;
    }
    // Every positive survived.
    CHECK(down.positives() == data.positives());
  }

  SUBCASE("infeasible requests fail") {
    const ScoredDataset small = testsupport::calibrated_scorer(100, 50, 2);
    CHECK_ERROR_CODE(downsample_negatives(small, Ratio(1, 1), 0),
                     ErrorCode::kInsufficientNegatives);
    CHECK_ERROR_CODE(
        downsample_negatives(ScoredDataset({{1, 0.5, {}, {}}}), Ratio(1, 1), 0),
        ErrorCode::kDegenerateDataset);
  }

  SUBCASE("the downsampled floor matches the target ratio's skew") {
    for (const Ratio& ratio : {Ratio(1, 1), Ratio(1, 4), Ratio(1, 12)}) {
      const ScoredDataset down = downsample_negatives(data, ratio, 3);
      CHECK(down.balance().skew() == doctest::Approx(ratio.skew()).epsilon(1e-15));
      CHECK(aucpr_min(down.balance().skew()) ==
            doctest::Approx(aucpr_min(ratio.skew())).epsilon(1e-15));
    }
  }
}

TEST_CASE("ratio sweep emits one row per (ratio, seed) cell") {
  const ScoredDataset data = testsupport::calibrated_scorer(50, 500, 11);
  const std::vector<Ratio> ratios = {Ratio(1, 1), Ratio(1, 5), Ratio(1, 10)};
  const std::vector<std::uint64_t> seeds = {0, 1, 2, 3};
  const auto rows = ratio_sweep(data, ratios, seeds, RecallRange::full());
  REQUIRE(rows.size() == ratios.size() * seeds.size());

  const MetricsReport original = compute_metrics(data, RecallRange::full());
  std::size_t i = 0;
  for (const Ratio& ratio : ratios) {
    for (const std::uint64_t seed : seeds) {
      CHECK(rows[i].ratio == ratio);
      CHECK(rows[i].seed == seed);
      CHECK(rows[i].orig_aucpr == original.aucpr);
      CHECK(rows[i].orig_aucnpr == original.aucnpr);
      ++i;
    }
  }

  SUBCASE("native-ratio rows equal the original columns exactly") {
    const auto identity =
        ratio_sweep(data, std::vector<Ratio>{Ratio(1, 10)}, seeds,
                    RecallRange::full());
    for (const SweepRow& row : identity) {
      CHECK(row.down_aucpr == row.orig_aucpr);
      CHECK(row.down_aucnpr == row.orig_aucnpr);
    }
  }
}

TEST_CASE("ratio sweep on a perfect scorer scores 1 everywhere") {
  const ScoredDataset data = testsupport::perfect_ranking(20, 200);
  const std::vector<Ratio> ratios = {Ratio(1, 1), Ratio(1, 10)};
  const std::vector<std::uint64_t> seeds = {0, 1};
  for (const SweepRow& row : ratio_sweep(data, ratios, seeds, RecallRange::full())) {
    CHECK(row.down_aucpr == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row.down_aucnpr == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row.orig_aucpr == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row.orig_aucnpr == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ratio sweep names the failing cell") {
  const ScoredDataset data = testsupport::calibrated_scorer(100, 150, 4);
  const std::vector<Ratio> ratios = {Ratio(1, 1), Ratio(1, 5)};
  const std::vector<std::uint64_t> seeds = {42};
  try {
    ratio_sweep(data, ratios, seeds, RecallRange::full());
    FAIL("expected InsufficientNegatives");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kInsufficientNegatives);
    CHECK(err.message().find("1:5") != std::string::npos);
    CHECK(err.message().find("42") != std::string::npos);
  }
  CHECK_ERROR_CODE(
      ratio_sweep(data, {}, seeds, RecallRange::full()), ErrorCode::kEmptyInput);
}

TEST_CASE("normalized scores vary less across skews than raw areas") {
  // Miniature of the acceptance sweep: the unachievable region moves with
  // the ratio, raw areas move with it, normalized ones move less.
  const ScoredDataset data = testsupport::calibrated_scorer(100, 2400, 21);
  const std::vector<Ratio> ratios = {Ratio(1, 1), Ratio(1, 4), Ratio(1, 24)};
  const std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4};
  std::vector<double> down_aucpr;
  std::vector<double> down_aucnpr;
  for (const SweepRow& row : ratio_sweep(data, ratios, seeds, RecallRange::full())) {
    down_aucpr.push_back(row.down_aucpr);
    down_aucnpr.push_back(row.down_aucnpr);
  }
  CHECK(testsupport::sample_stddev(down_aucnpr) <=
        testsupport::sample_stddev(down_aucpr));
}
