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

#include <filesystem>
#include <span>
#include <vector>

#include "aer/common.hpp"

namespace aer {

// Per-column clip bounds (nearest-rank percentiles of the training split)
// and post-clip min/max for [0,1] normalization.
struct ScalerParams {
  std::vector<double> p_low;
  std::vector<double> p_high;
  std::vector<double> min;
  std::vector<double> max;

  std::size_t cols() const { return p_low.size(); }
};

// Nearest-rank percentile: value at 1-based index ceil(p/100 * n) of the
// sorted data, clamped to index 1.
double percentile_nearest_rank(std::span<const double> values, double p);

// Fits on the training matrix only. p_low/p_high default to the 2nd and
// 98th percentiles.
ScalerParams fit_scaler(const Matrix& train, double p_low = 2.0, double p_high = 98.0);

// x -> clamp(x, p_low, p_high) -> (x - min)/(max - min); constant columns
// (max == min) map to 0.0. Output always lies in [0, 1].
void transform(Matrix& features, const ScalerParams& params);

void save_scaler(const std::filesystem::path& path, const ScalerParams& params);
ScalerParams load_scaler(const std::filesystem::path& path);

}  // namespace aer
