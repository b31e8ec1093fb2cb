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

// Wall-clock comparison of the OpenMP kernels against their serial reference
// implementations, with a bitwise equality check on the outputs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aer/common.hpp"
#include "aer/dataset.hpp"
#include "aer/features.hpp"
#include "aer/relieff.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::memcmp(&a[i], &b[i], sizeof(double)) != 0) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP benchmark for feature extraction and relief ranking"};
  std::size_t n_utts = 24;
  double utt_seconds = 2.0;
  std::size_t relieff_n = 600;
  app.add_option("--utterances", n_utts, "Signals for the extraction benchmark");
  app.add_option("--seconds", utt_seconds, "Length of each signal in seconds");
  app.add_option("--instances", relieff_n, "Rows for the ranking benchmark");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  std::vector<aer::Signal> signals(n_utts);
  std::vector<std::string> ids(n_utts);
  const double rate = 16000.0;
  for (std::size_t i = 0; i < n_utts; ++i) {
    ids[i] = "bench" + std::to_string(i);
    const double f0 = 120.0 + 260.0 * uni(rng);
    const auto len = static_cast<std::size_t>(utt_seconds * rate);
    signals[i].sample_rate = rate;
    signals[i].samples.resize(len);
    for (std::size_t t = 0; t < len; ++t) {
      const double phase = 2.0 * std::numbers::pi * f0 * t / rate;
      signals[i].samples[t] =
          0.4 * (std::sin(phase) + 0.5 * std::sin(2 * phase)) + 0.02 * (uni(rng) - 0.5);
    }
  }

  const aer::ExtractParams params;
  auto t0 = std::chrono::steady_clock::now();
  const aer::Table serial = aer::extract_table_serial(signals, ids, params);
  const double t_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const aer::Table parallel = aer::extract_table(signals, ids, params);
  const double t_parallel = seconds_since(t0);
  std::printf("extract   %zu signals x %.1fs: serial %.3fs, parallel %.3fs, speedup %.2fx, "
              "outputs identical: %s\n",
              n_utts, utt_seconds, t_serial, t_parallel, t_serial / t_parallel,
              identical(serial.m.data, parallel.m.data) ? "yes" : "NO");

  aer::Matrix X(relieff_n, aer::kFeatureCount);
  std::vector<double> y(relieff_n);
  for (std::size_t i = 0; i < relieff_n; ++i) {
    for (std::size_t j = 0; j < X.cols; ++j) X.at(i, j) = uni(rng);
    y[i] = X.at(i, 0) + 0.25 * uni(rng);
  }
  const aer::RReliefFParams rp;
  t0 = std::chrono::steady_clock::now();
  const aer::FeatureRanking r_serial = aer::rrelieff_serial(X, y, rp);
  const double r_t_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const aer::FeatureRanking r_parallel = aer::rrelieff(X, y, rp);
  const double r_t_parallel = seconds_since(t0);
  std::printf("relieff   %zu x %zu: serial %.3fs, parallel %.3fs, speedup %.2fx, "
              "outputs identical: %s\n",
              relieff_n, X.cols, r_t_serial, r_t_parallel, r_t_serial / r_t_parallel,
              identical(r_serial.weights, r_parallel.weights) ? "yes" : "NO");
  return 0;
}
