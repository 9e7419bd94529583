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

#ifndef PRSPACE_SAMPLING_HPP_
#define PRSPACE_SAMPLING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prspace/bounds.hpp"
#include "prspace/types.hpp"

namespace prspace {

/// A positive:negative class ratio such as 1:5. Both parts must be >= 1.
class Ratio {
 public:
  Ratio(std::int64_t pos_part, std::int64_t neg_part);

  std::int64_t pos_part() const noexcept { return pos_part_; }
  std::int64_t neg_part() const noexcept { return neg_part_; }

  /// Skew implied by the ratio: pos_part / (pos_part + neg_part).
  double skew() const noexcept {
    return static_cast<double>(pos_part_) /
           static_cast<double>(pos_part_ + neg_part_);
  }

  std::string str() const;
  static Ratio parse(std::string_view text);

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::int64_t pos_part_;
  std::int64_t neg_part_;
};

/// Keeps every positive and a uniform without-replacement sample of
/// negatives sized to the target ratio (rounded down when the ratio does not
/// divide evenly). Retained records keep their original order. The draw is
/// fully determined by (data, ratio, seed): the generator is a mt19937_64
/// seeded from the seed and the ratio parts, with rejection-sampled bounded
/// draws, so results are reproducible across platforms. When the data set
/// already has at most the target number of negatives at the exact target,
/// the records are returned unchanged.
ScoredDataset downsample_negatives(const ScoredDataset& data, const Ratio& ratio,
                                   std::uint64_t seed);

/// One cell of a ratio sweep: metrics of the downsampled data next to the
/// metrics of the original, undownsampled data.
struct SweepRow {
  Ratio ratio;
  std::uint64_t seed;
  double down_aucpr;
  double down_aucnpr;
  double orig_aucpr;
  double orig_aucnpr;
};

/// Downsamples and scores every (ratio, seed) pair. Rows come out in input
/// order (ratios outer, seeds inner); failures are rethrown with the
/// offending ratio and seed named.
std::vector<SweepRow> ratio_sweep(const ScoredDataset& data,
                                  std::span<const Ratio> ratios,
                                  std::span<const std::uint64_t> seeds,
                                  const RecallRange& range);

}  // namespace prspace

#endif  // PRSPACE_SAMPLING_HPP_
