/* Copyright 2026 the aer authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "aer/common.hpp"

namespace aer {

struct RReliefFParams {
  std::size_t m = 0;      // sampled instances; 0 = all, in deterministic order
  std::size_t k = 10;     // neighbors
  double sigma = 20.0;    // rank-weighting scale
  std::uint64_t seed = 0; // only used when m < n
};

struct FeatureRanking {
  std::vector<double> weights;      // one per feature, in [-1, 1]
  std::vector<std::size_t> order;   // features by descending weight, ties by index
};

// Regression relief: for each sampled instance, its k nearest neighbors by
// Manhattan distance over range-normalized features vote with influence
// exp(-(rank/sigma)^2), normalized to sum 1. Accumulates label-difference,
// attribute-difference, and joint-difference mass; weights combine them as
// N_joint/N_label - (N_attr - N_joint)/(m - N_label), each quotient taken as
// 0 when its denominator is 0. A constant label yields all-zero weights.
// Requires n >= k + 1.
FeatureRanking rrelieff(const Matrix& X, std::span<const double> y, const RReliefFParams& p);

// Serial reference; the parallel variant reduces per-instance contributions
// in instance order and matches it bit for bit.
FeatureRanking rrelieff_serial(const Matrix& X, std::span<const double> y,
                               const RReliefFParams& p);

// First k entries of ranking.order; k must be in [1, feature count].
std::vector<std::size_t> top_k(const FeatureRanking& ranking, std::size_t k);

void save_ranking(const std::filesystem::path& path, const FeatureRanking& ranking,
                  const std::vector<std::string>& feature_names);
FeatureRanking load_ranking(const std::filesystem::path& path);

}  // namespace aer
