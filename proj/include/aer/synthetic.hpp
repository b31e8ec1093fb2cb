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

namespace aer {

// Deterministic synthetic mini-dataset: harmonic tones plus light noise,
// arousal tied to amplitude and valence to fundamental frequency. Written
// under `dir`:
//   wav/<id>.wav        one file per utterance
//   manifest.csv        train/validation/test splits with labels
//   preds/<target>/peer_{a,b,c}.csv   noisy label predictions from three
//                       simulated external models (noise sigma 0.05 / 0.15 /
//                       0.35), usable as fusion peers
struct SynthSpec {
  std::size_t n_train = 40;
  std::size_t n_validation = 10;
  std::size_t n_test = 0;
  std::uint64_t seed = 7;
  double sample_rate = 16000.0;
};

void generate_synthetic_dataset(const std::filesystem::path& dir, const SynthSpec& spec);

}  // namespace aer
