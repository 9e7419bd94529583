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
#include <charconv>
#include <limits>
#include <random>
#include <utility>

#include "prspace/aggregate.hpp"

namespace prspace {

namespace {

// Rejection-sampled bounded draw. mt19937_64 and this loop are both fully
// specified, so the same (seed, ratio) pair selects the same negatives on
// every platform; std::uniform_int_distribution is not pinned down that way.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t overflow = (max % n + 1) % n;  // 2^64 mod n
  std::uint64_t draw = rng();
  while (overflow != 0 && draw >= max - overflow + 1) {
    draw = rng();
  }
  return draw % n;
}

std::mt19937_64 cell_generator(std::uint64_t seed, const Ratio& ratio) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(ratio.pos_part()),
      static_cast<std::uint32_t>(ratio.neg_part()),
  };
  return std::mt19937_64(seq);
}

}  // namespace

Ratio::Ratio(std::int64_t pos_part, std::int64_t neg_part)
    : pos_part_(pos_part), neg_part_(neg_part) {
  if (pos_part < 1 || neg_part < 1) {
    throw Error(ErrorCode::kDomainError,
                "ratio parts must be >= 1, got " + std::to_string(pos_part) +
                    ":" + std::to_string(neg_part));
  }
}

std::string Ratio::str() const {
  return std::to_string(pos_part_) + ":" + std::to_string(neg_part_);
}

Ratio Ratio::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParseError,
                "ratio must look like p:n, got '" + std::string(text) + "'");
  }
  auto parse_part = [&text](std::string_view part) {
    std::int64_t value = 0;
    const auto* end = part.data() + part.size();
    const auto result = std::from_chars(part.data(), end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
      throw Error(ErrorCode::kParseError,
                  "ratio must look like p:n, got '" + std::string(text) + "'");
    }
    return value;
  };
  const std::int64_t pos_part = parse_part(text.substr(0, colon));
  const std::int64_t neg_part = parse_part(text.substr(colon + 1));
  return Ratio(pos_part, neg_part);
}

ScoredDataset downsample_negatives(const ScoredDataset& data, const Ratio& ratio,
                                   std::uint64_t seed) {
  if (!data.has_both_classes()) {
    throw Error(ErrorCode::kDegenerateDataset,
                "downsampling needs at least one positive and one negative "
                "example");
  }
  const std::int64_t pos = data.positives();
  const std::int64_t neg = data.negatives();
  // Widened so absurd ratios fail as infeasible instead of overflowing.
  const auto wide_target = static_cast<__int128>(pos) * ratio.neg_part() /
                           ratio.pos_part();
  if (wide_target > neg) {
    const std::string needed =
        wide_target <= static_cast<__int128>(INT64_MAX)
            ? std::to_string(static_cast<std::int64_t>(wide_target))
            : "more than " + std::to_string(INT64_MAX);
    throw Error(ErrorCode::kInsufficientNegatives,
                "ratio " + ratio.str() + " needs " + needed +
                    " negatives but only " + std::to_string(neg) +
                    " are present");
  }
  const auto target = static_cast<std::int64_t>(wide_target);
  if (target < 1) {
    throw Error(ErrorCode::kDomainError,
                "target ratio " + ratio.str() + " keeps no negatives for " +
                    std::to_string(pos) + " positives");
  }
  if (neg == target) {
    return data;  // already at the target skew; keep records bit-identical
  }

  std::vector<std::size_t> negative_at;  // record index of each negative
  negative_at.reserve(static_cast<std::size_t>(neg));
  for (std::size_t i = 0; i < data.records().size(); ++i) {
    if (data.records()[i].label == 0) {
      negative_at.push_back(i);
    }
  }

  // Partial Fisher-Yates: after `target` swaps the prefix is a uniform
  // without-replacement sample.
  std::mt19937_64 rng = cell_generator(seed, ratio);
  for (std::size_t i = 0; i < static_cast<std::size_t>(target); ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(
                uniform_index(rng, static_cast<std::uint64_t>(negative_at.size() - i)));
    std::swap(negative_at[i], negative_at[j]);
  }
  negative_at.resize(static_cast<std::size_t>(target));
  std::sort(negative_at.begin(), negative_at.end());

  std::vector<ScoredRecord> kept;
  kept.reserve(static_cast<std::size_t>(pos + target));
  std::size_t next_negative = 0;
  for (std::size_t i = 0; i < data.records().size(); ++i) {
    const ScoredRecord& rec = data.records()[i];
    if (rec.label == 1) {
      kept.push_back(rec);
    } else if (next_negative < negative_at.size() &&
               negative_at[next_negative] == i) {
      kept.push_back(rec);
      ++next_negative;
    }
  }
  return ScoredDataset(std::move(kept));
}

std::vector<SweepRow> ratio_sweep(const ScoredDataset& data,
                                  std::span<const Ratio> ratios,
                                  std::span<const std::uint64_t> seeds,
                                  const RecallRange& range) {
  if (ratios.empty() || seeds.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "ratio sweep needs at least one ratio and one seed");
  }
  const MetricsReport original = compute_metrics(data, range);

  std::vector<SweepRow> rows;
  rows.reserve(ratios.size() * seeds.size());
  for (const Ratio& ratio : ratios) {
    for (const std::uint64_t seed : seeds) {
      try {
        const ScoredDataset sampled = downsample_negatives(data, ratio, seed);
        const MetricsReport down = compute_metrics(sampled, range);
        rows.push_back(SweepRow{ratio, seed, down.aucpr, down.aucnpr,
                                original.aucpr, original.aucnpr});
      } catch (const Error& err) {
        throw Error(err.code(), "ratio " + ratio.str() + ", seed " +
                                    std::to_string(seed) + ": " + err.message());
      }
    }
  }
  return rows;
}

}  // namespace prspace
