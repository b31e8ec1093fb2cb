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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aer {

enum class Split { train, validation, test };

const char* split_name(Split s);
std::optional<Split> parse_split(std::string_view s);

struct Utterance {
  std::string id;
  std::string wav_path;
  Split split = Split::train;
  std::optional<double> arousal;  // in [0, 1] when present
  std::optional<double> valence;  // in [-1, 1] when present
};

// Manifest CSV with header exactly `utterance_id,wav_path,split,arousal,valence`.
// Labels may be empty only for split=test; train/validation rows must carry
// both labels. Duplicate ids are an error.
std::vector<Utterance> load_manifest(const std::filesystem::path& path);

struct Signal {
  std::vector<double> samples;  // amplitudes in [-1, 1]
  double sample_rate = 16000.0;
};

// Reads RIFF/WAVE, PCM s16, 1 or 2 channels. Stereo is averaged to mono,
// samples are scaled by 1/32768, and the result is resampled to 16 kHz by
// linear interpolation when the source rate differs.
Signal read_wav(const std::filesystem::path& path);

// Writes mono PCM s16 at the given rate; samples are clamped to [-1, 1].
void write_wav(const std::filesystem::path& path, std::span<const double> samples,
               std::uint32_t sample_rate);

// Resamples by linear interpolation preserving endpoints:
// output length = floor((n-1) * dst/src) + 1.
std::vector<double> resample_linear(std::span<const double> x, double src_rate, double dst_rate);

// Frame t covers samples [t*hop, t*hop + window_len). A trailing partial
// window is dropped; a signal shorter than window_len yields exactly one
// zero-padded frame.
std::vector<std::vector<double>> frame_signal(std::span<const double> x, std::size_t window_len,
                                              std::size_t hop);

}  // namespace aer
