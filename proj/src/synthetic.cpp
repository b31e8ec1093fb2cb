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

#include "aer/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "aer/common.hpp"
#include "aer/csv.hpp"
#include "aer/dataset.hpp"

namespace aer {

namespace {

// Distinct, stable stream per (seed, utterance, purpose).
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index, std::uint64_t purpose) {
  std::uint64_t z = seed ^ (index * 0x9e3779b97f4a7c15ULL) ^ (purpose << 32);
  // splitmix64 scrambling so nearby indices decorrelate
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

struct UtteranceSpec {
  std::string id;
  Split split;
  double arousal;
  double valence;
  double amplitude;
  double f0;
  double duration;
};

}  // namespace

void generate_synthetic_dataset(const std::filesystem::path& dir, const SynthSpec& spec) {
  const std::size_t n = spec.n_train + spec.n_validation + spec.n_test;
  if (n == 0) throw ContractError("synthetic dataset needs at least one utterance");

  std::filesystem::create_directories(dir / "wav");
  std::filesystem::create_directories(dir / "preds" / "arousal");
  std::filesystem::create_directories(dir / "preds" / "valence");

  std::vector<UtteranceSpec> utts(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = stream(spec.seed, i, 1);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double u_amp = uni(rng);
    const double u_f0 = uni(rng);
    const double u_dur = uni(rng);

    UtteranceSpec& u = utts[i];
    char buf[32];
    std::snprintf(buf, sizeof(buf), "utt%03zu", i);
    u.id = buf;
    u.split = i < spec.n_train                      ? Split::train
              : i < spec.n_train + spec.n_validation ? Split::validation
                                                     : Split::test;
    u.arousal = 0.15 + 0.7 * u_amp;
    u.valence = -0.8 + 1.6 * u_f0;
    u.amplitude = 0.1 + 0.6 * u_amp;
    u.f0 = 120.0 + 240.0 * u_f0;
    u.duration = 1.0 + 0.5 * u_dur;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const UtteranceSpec& u = utts[i];
    auto rng = stream(spec.seed, i, 2);
    std::uniform_real_distribution<double> noise(-1.0, 1.0);

    const auto len = static_cast<std::size_t>(u.duration * spec.sample_rate);
    std::vector<double> x(len, 0.0);
    const std::size_t lead = len / 20;  // brief silence at both ends
    for (std::size_t t = lead; t + lead < len; ++t) {
      const double time = static_cast<double>(t) / spec.sample_rate;
      const double phase = 2.0 * std::numbers::pi * u.f0 * time;
      double tone = std::sin(phase) + 0.5 * std::sin(2.0 * phase) + 0.3 * std::sin(3.0 * phase);
      tone /= 1.8;
      const double tremolo = 1.0 + 0.2 * std::sin(2.0 * std::numbers::pi * 3.0 * time);
      x[t] = u.amplitude * tone * tremolo + 0.005 * noise(rng);
    }
    write_wav(dir / "wav" / (u.id + ".wav"), x,
              static_cast<std::uint32_t>(spec.sample_rate));
  }

  std::vector<std::string> manifest = {"utterance_id,wav_path,split,arousal,valence"};
  for (const UtteranceSpec& u : utts) {
    std::string row = u.id + ",wav/" + u.id + ".wav," + split_name(u.split) + ',';
    if (u.split != Split::test) {
      row += format_double(u.arousal);
      row += ',';
      row += format_double(u.valence);
    } else {
      row += ',';
    }
    manifest.push_back(std::move(row));
  }
  write_lines(dir / "manifest.csv", manifest);

  // Simulated external base models: the true label plus Gaussian noise with a
  // per-peer level, covering every utterance so any subset joins cleanly.
  const struct {
    const char* name;
    double sigma;
    std::uint64_t purpose;
  } peers[] = {{"peer_a", 0.05, 3}, {"peer_b", 0.15, 4}, {"peer_c", 0.35, 5}};

  for (int target = 0; target < 2; ++target) {
    const char* target_dir = target == 0 ? "arousal" : "valence";
    for (const auto& peer : peers) {
      std::vector<std::string> lines = {"utterance_id,prediction"};
      for (std::size_t i = 0; i < n; ++i) {
        auto rng = stream(spec.seed, i, peer.purpose + 16 * static_cast<std::uint64_t>(target));
        std::normal_distribution<double> gauss(0.0, peer.sigma);
        const double truth = target == 0 ? utts[i].arousal : utts[i].valence;
        lines.push_back(utts[i].id + ',' + format_double(truth + gauss(rng)));
      }
      write_lines(dir / "preds" / target_dir / (std::string(peer.name) + ".csv"), lines);
    }
  }
}

}  // namespace aer
