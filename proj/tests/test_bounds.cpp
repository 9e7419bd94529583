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

#include "prspace/bounds.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "support/doctest_helpers.hpp"
#include "support/test_support.hpp"

using namespace prspace;

namespace {
const std::vector<double> kSkewGrid = {1e-6, 1e-4, 0.001, 0.01, 0.05, 0.1,
                                       0.25, 1.0 / 3.0, 0.5, 0.75, 0.9, 0.999};
}

TEST_CASE("recall range validation") {
  const RecallRange full = RecallRange::full();
  CHECK(full.lo() == 0.0);
  CHECK(full.hi() == 1.0);
  CHECK(full.width() == 1.0);
  CHECK(full.is_full());
  CHECK(!RecallRange(0.5, 1.0).is_full());

  CHECK_ERROR_CODE(RecallRange(0.5, 0.5), ErrorCode::kInvalidRange);
  CHECK_ERROR_CODE(RecallRange(0.8, 0.2), ErrorCode::kInvalidRange);
  CHECK_ERROR_CODE(RecallRange(-0.1, 0.5), ErrorCode::kInvalidRange);
  CHECK_ERROR_CODE(RecallRange(0.0, 1.1), ErrorCode::kInvalidRange);
}

TEST_CASE("min_precision known values") {
  CHECK(min_precision(0.5, 1.0 / 3.0) == doctest::Approx(0.2).epsilon(1e-12));
  // 3/13, confirmed by scanning every valid matrix at recall 0.6 below.
  CHECK(min_precision(0.6, 1.0 / 3.0) ==
        doctest::Approx(0.23076923076923078).epsilon(1e-12));
  for (double skew : kSkewGrid) {
    CHECK(min_precision(0.0, skew) == 0.0);
    CHECK(min_precision(1.0, skew) == doctest::Approx(skew).epsilon(1e-12));
  }
}

TEST_CASE("min_precision at recall 0.6 matches exhaustive matrix search") {
  // pos = 100, neg = 200: enumerate every valid matrix with tp = 60 and find
  // the smallest precision any of them attains.
  double lowest = 1.0;
  for (std::int64_t fp = 0; fp <= 200; ++fp) {
    const PRPoint point = pr_point(validate_confusion(60, fp, 40, 200 - fp));
    lowest = std::min(lowest, point.precision);
  }
  CHECK(lowest == doctest::Approx(min_precision(0.6, 1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("min_precision domain errors") {
  CHECK_ERROR_CODE(min_precision(0.5, 0.0), ErrorCode::kDegenerateSkew);
  CHECK_ERROR_CODE(min_precision(0.5, 1.0), ErrorCode::kDegenerateSkew);
  CHECK_ERROR_CODE(min_precision(0.5, -0.2), ErrorCode::kDegenerateSkew);
  CHECK_ERROR_CODE(min_precision(0.5, std::nan("")), ErrorCode::kDegenerateSkew);
  CHECK_ERROR_CODE(min_precision(1.2, 0.5), ErrorCode::kDomainError);
  CHECK_ERROR_CODE(min_precision(-0.1, 0.5), ErrorCode::kDomainError);
}

TEST_CASE("is_achievable classifies the documented points") {
  CHECK_FALSE(is_achievable(PRPoint(0.6, 0.2), 1.0 / 3.0));
  CHECK(is_achievable(PRPoint(0.5, 0.2), 1.0 / 3.0));  // exactly on the boundary
  CHECK_FALSE(is_achievable(PRPoint(0.9, 0.3), 0.33));
  CHECK(is_achievable(PRPoint(0.3, 0.9), 0.33));
  CHECK_ERROR_CODE(is_achievable(PRPoint(0.5, 0.5), 0.0),
                   ErrorCode::kDegenerateSkew);
}

TEST_CASE("minimum curve shape") {
  const MinCurve curve = minimum_pr_curve(1.0 / 3.0);
  CHECK(curve(0.0) == 0.0);
  CHECK(curve(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const MinCurve half = minimum_pr_curve(0.5);
  CHECK(half(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // Strictly increasing and concave along a fine grid.
  for (double skew : {0.05, 0.3, 0.7}) {
    const MinCurve c(skew);
    double prev = c(0.0);
    double prev_delta = -1.0;
    for (int i = 1; i <= 1000; ++i) {
      const double value = c(i / 1000.0);
      const double delta = value - prev;
      CHECK(delta > 0.0);
      if (prev_delta >= 0.0) {
        CHECK(delta <= prev_delta + 1e-15);
      }
      prev_delta = delta;
      prev = value;
    }
  }
}

TEST_CASE("minimum curve polyline sampling") {
  const MinCurve curve(0.2);
  const MinCurve::Polyline line = curve.sample(0.25);
  CHECK(line.grid_step == 0.25);
  REQUIRE(line.points.size() == 5);
  CHECK(line.points.front() == PRPoint(0.0, 0.0));
  CHECK(line.points.back().recall == 1.0);
  CHECK(line.points.back().precision == doctest::Approx(0.2));
  CHECK_ERROR_CODE(curve.sample(0.0), ErrorCode::kDomainError);
}

TEST_CASE("aucpr_min matches the closed form and the quadrature oracle") {
  // 1 + (1 - pi) ln(1 - pi) / pi, evaluated directly.
  CHECK(aucpr_min(0.5) == doctest::Approx(0.30685281944005469).epsilon(1e-12));
  CHECK(aucpr_min(0.1) == doctest::Approx(0.051755359079563289).epsilon(1e-12));
  CHECK(aucpr_min(0.01) == doctest::Approx(0.0050167505033573228).epsilon(1e-12));
  CHECK(aucpr_min(1.0 / 3.0) ==
        doctest::Approx(0.18906978378367124).epsilon(1e-12));

  for (double skew : kSkewGrid) {
    const double direct = 1.0 + (1.0 - skew) * std::log1p(-skew) / skew;
    CHECK(aucpr_min(skew) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(std::abs(aucpr_min(skew) -
                   testsupport::boundary_area_quadrature(skew, 0.0, 1.0)) <
          1e-10);
  }
  CHECK_ERROR_CODE(aucpr_min(0.0), ErrorCode::kDegenerateSkew);
  CHECK_ERROR_CODE(aucpr_min(1.0), ErrorCode::kDegenerateSkew);
}

TEST_CASE("aucpr_min is increasing in skew with the right limits") {
  double prev = 0.0;
  for (double skew : kSkewGrid) {
    const double value = aucpr_min(skew);
    CHECK(value > prev);
    prev = value;
  }
  // Toward the ends the area vanishes and saturates respectively.
  CHECK(std::abs(aucpr_min(1e-6) -
                 testsupport::boundary_area_quadrature(1e-6, 0.0, 1.0)) < 1e-10);
  CHECK(aucpr_min(1e-6) == doctest::Approx(5e-7).epsilon(1e-3));
  CHECK(std::abs(aucpr_min(1.0 - 1e-6) -
                 testsupport::boundary_area_quadrature(1.0 - 1e-6, 0.0, 1.0)) <
        1e-10);
  CHECK(aucpr_min(1.0 - 1e-6) > 0.99998);

  // Deep into the series branch the expansion must agree with quadrature.
  CHECK(std::abs(aucpr_min(1e-10) -
                 testsupport::boundary_area_quadrature(1e-10, 0.0, 1.0)) <
        1e-16);
}

TEST_CASE("aucpr_min_range known values and consistency") {
  CHECK(aucpr_min_range(0.5, RecallRange::full()) == aucpr_min(0.5));
  CHECK(aucpr_min_range(0.5, RecallRange(0.5, 1.0)) ==
        doctest::Approx(0.21231792754821907).epsilon(1e-12));
  CHECK(aucpr_min_range(0.1, RecallRange(0.8, 1.0)) ==
        doctest::Approx(0.018175634142324964).epsilon(1e-12));

  for (double skew : kSkewGrid) {
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{
             {0.0, 1.0}, {0.5, 1.0}, {0.8, 1.0}, {0.1, 0.3}}) {
      CHECK(std::abs(aucpr_min_range(skew, RecallRange(a, b)) -
                     testsupport::boundary_area_quadrature(skew, a, b)) < 1e-10);
    }
  }
}

TEST_CASE("aucpr_min_range is additive over adjacent ranges") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    const double skew = kSkewGrid[rng() % kSkewGrid.size()];
    double cuts[3] = {testsupport::unit_uniform(rng),
                      testsupport::unit_uniform(rng),
                      testsupport::unit_uniform(rng)};
    std::sort(std::begin(cuts), std::end(cuts));
    const auto [a, b, c] = std::tuple{cuts[0], cuts[1], cuts[2]};
    if (b - a < 1e-6 || c - b < 1e-6) {
      continue;
    }
    const double split = aucpr_min_range(skew, RecallRange(a, b)) +
                         aucpr_min_range(skew, RecallRange(b, c));
    const double whole = aucpr_min_range(skew, RecallRange(a, c));
    CHECK(std::abs(split - whole) < 1e-12);
  }
}

TEST_CASE("most of the unachievable area sits at high recall") {
  for (double skew : kSkewGrid) {
    CHECK(aucpr_min_range(skew, RecallRange(0.5, 1.0)) >
          aucpr_min_range(skew, RecallRange(0.0, 0.5)));
  }
}

TEST_CASE("ap_min known values") {
  CHECK(ap_min(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ap_min(2, 2) == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
  for (std::int64_t pos : {1, 2, 7, 100}) {
    CHECK(ap_min(pos, 0) == 1.0);
  }
  CHECK_ERROR_CODE(ap_min(0, 5), ErrorCode::kNoPositives);
  CHECK_ERROR_CODE(ap_min(3, -1), ErrorCode::kDomainError);
}

TEST_CASE("the bound is tight: tn = 0 matrices sit exactly on it") {
  for (const auto& [pos, neg] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {100, 200}, {50, 50}, {10, 90}, {100, 900}, {3, 7}}) {
    const double skew = ClassBalance(pos, neg).skew();
    for (std::int64_t tp = 0; tp <= pos; ++tp) {
      const PRPoint point = pr_point(validate_confusion(tp, neg, pos - tp, 0));
      CHECK(std::abs(point.precision - min_precision(point.recall, skew)) <
            1e-12);
    }
  }
}
