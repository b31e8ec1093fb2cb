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
#include <string>
#include <string_view>
#include <vector>

#include "aer/features.hpp"
#include "aer/model_select.hpp"
#include "aer/relieff.hpp"

namespace aer {

// Everything tunable about the pipeline, in one place. Loaded from a flat
// `key = value` file; CLI flags override file values.
struct PipelineConfig {
  ExtractParams extract;
  double p_low = 2.0;
  double p_high = 98.0;
  RReliefFParams relieff;
  SelectionGrids grids;
  std::vector<std::string> exclude_arousal;
  std::vector<std::string> exclude_valence;
  std::uint64_t seed = 0;
};

// Recognized keys: sample_rate, window_len, hop, n_fft, n_mels, lpc_order,
// preemphasis, band_split_hz, pitch_min_hz, pitch_max_hz, voicing_threshold,
// p_low, p_high, relieff_k, relieff_sigma, relieff_m, svr_k_grid, svr_c_grid,
// svr_epsilon_grid, svr_gamma_grid (values plus the token `auto`),
// exclude_arousal, exclude_valence, seed. Lists are comma-separated. Lines
// starting with '#' and blank lines are skipped. Unknown keys are errors.
PipelineConfig load_config(const std::filesystem::path& path);

// Applies one key/value pair; shared by the file loader and flag overrides.
void apply_config_entry(PipelineConfig& cfg, std::string_view key, std::string_view value);

}  // namespace aer
