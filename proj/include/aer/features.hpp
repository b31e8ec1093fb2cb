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

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "aer/cepstral.hpp"
#include "aer/common.hpp"
#include "aer/dataset.hpp"

namespace aer {

inline constexpr std::size_t kFeatureCount = 76;

// Fixed utterance descriptor layout:
//   [0..11]  mean, variance of centroid, band ratio, delta spectrum, ZCR,
//            energy, pitch (mean then variance per feature)
//   [12]     silence ratio
//   [13..24] MFCC c1..c12 means        [25..36] MFCC variances
//   [37..48] delta-MFCC means
//   [49..59] LPCC 1..11 means          [60..70] LPCC variances
//   [71..75] formant F1..F5 means
using FeatureVector = std::array<double, kFeatureCount>;

// Column names f00_centroid_mean .. f75_formant5_mean, in layout order.
const std::vector<std::string>& feature_names();

struct ExtractParams {
  double sample_rate = 16000.0;
  std::size_t window_len = 200;
  std::size_t hop = 80;
  std::size_t n_fft = 256;
  std::size_t n_mels = 26;
  std::size_t lpc_order = 12;
  double preemphasis = 0.97;
  double band_split_hz = 2000.0;
  double pitch_min_hz = 50.0;
  double pitch_max_hz = 500.0;
  double voicing_threshold = 0.3;
};

// All statistics are population moments over frames. Pitch statistics run
// over voiced frames only (both 0 when none); each formant mean runs over
// the frames where that formant is nonzero.
FeatureVector extract_utterance(std::span<const double> samples, const ExtractParams& p,
                                const cepstral::MelFilterbank& fb);

// One feature row per signal, parallel across signals. Output is identical
// to the serial variant bit for bit: each row is written into its own slot.
Table extract_table(const std::vector<Signal>& signals, const std::vector<std::string>& ids,
                    const ExtractParams& p);

// Serial reference used by tests and the benchmark.
Table extract_table_serial(const std::vector<Signal>& signals,
                           const std::vector<std::string>& ids, const ExtractParams& p);

void save_features(const std::filesystem::path& path, const Table& t);
Table load_features(const std::filesystem::path& path);

}  // namespace aer
