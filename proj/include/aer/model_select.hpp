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
#include "aer/relieff.hpp"
#include "aer/svr.hpp"

namespace aer {

// Hyperparameter grids for feature-count and SVR selection. gamma_auto adds
// gamma = 1/k (k = selected feature count) after the explicit gamma values.
struct SelectionGrids {
  std::vector<std::size_t> k = {5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60, 65, 70, 75, 76};
  std::vector<double> C = {0.1, 1.0, 10.0, 100.0};
  std::vector<double> epsilon = {0.01, 0.1};
  std::vector<double> gamma = {0.01, 0.1};
  bool gamma_auto = true;
};

struct SelectionEntry {
  std::size_t k = 0;
  SvrHyper hyper;
  double val_ccc = 0;
};

struct SelectionResult {
  std::size_t k = 0;
  SvrHyper hyper;
  SvrModel model;
  double val_ccc = 0;
  std::vector<SelectionEntry> log;  // one entry per configuration, grid order
};

// Trains one model per grid configuration on the training split restricted
// to the top-k ranked features and keeps the best validation CCC. Ties go to
// the earlier grid position (fewer features, then smaller C, then smaller
// epsilon, then gamma in grid order). Configurations run in parallel; results
// land in per-configuration slots, so the outcome is order-independent.
SelectionResult model_select(const Matrix& train_x, std::span<const double> train_y,
                             const Matrix& val_x, std::span<const double> val_y,
                             const FeatureRanking& ranking, const SelectionGrids& grids);

void save_selection_log(const std::filesystem::path& path,
                        const std::vector<SelectionEntry>& log);

}  // namespace aer
