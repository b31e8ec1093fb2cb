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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "aer/common.hpp"
#include "aer/dsp.hpp"
#include "doctest.h"
#include "oracles.hpp"

using aer::dsp::fft;

namespace {

double max_rel_err(const std::vector<std::complex<double>>& got,
                   const std::vector<std::complex<double>>& want) {
  double scale = 0;
  for (const auto& w : want) scale = std::max(scale, std::abs(w));
  if (scale == 0) scale = 1;
  double err = 0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    err = std::max(err, std::abs(got[i] - want[i]) / scale);
  }
  return err;
}

}  // namespace

TEST_CASE("fft matches the DFT definition on random inputs") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t n : {2u, 4u, 8u, 32u, 128u, 256u}) {
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = {gauss(rng), gauss(rng)};
    auto got = x;
    fft(got);
    CHECK(max_rel_err(got, oracle::naive_dft(x)) < 1e-9);
  }
}

TEST_CASE("fft of an impulse is flat and of a complex tone is a single bin") {
  std::vector<std::complex<double>> x(16, 0.0);
  x[0] = 1.0;
  fft(x);
  for (const auto& v : x) CHECK(std::abs(v - std::complex<double>{1.0, 0.0}) < 1e-12);

  std::vector<std::complex<double>> tone(64);
  for (std::size_t t = 0; t < tone.size(); ++t) {
    const double angle = 2.0 * std::numbers::pi * 5.0 * static_cast<double>(t) / 64.0;
    tone[t] = {std::cos(angle), std::sin(angle)};
  }
  fft(tone);
  for (std::size_t k = 0; k < tone.size(); ++k) {
    if (k == 5) {
      CHECK(std::abs(tone[k] - std::complex<double>{64.0, 0.0}) < 1e-9);
    } else {
      CHECK(std::abs(tone[k]) < 1e-9);
    }
  }
}

TEST_CASE("preemphasis differences against a zero-initialized history") {
  std::vector<double> x = {1.0, 1.0, 1.0};
  const auto y = aer::dsp::preemphasis(x, 0.97);
  CHECK(y[0] == 1.0);
  CHECK(y[1] == doctest::Approx(0.03).epsilon(1e-12));
  CHECK(y[2] == doctest::Approx(0.03).epsilon(1e-12));
}

TEST_CASE("hamming window endpoints and degenerate length") {
  const auto w = aer::dsp::hamming_window(400);
  CHECK(w.front() == doctest::Approx(0.08).epsilon(1e-12));
  CHECK(w.back() == doctest::Approx(0.08).epsilon(1e-12));
  CHECK(w[200] > 0.9);
  CHECK(aer::dsp::hamming_window(1) == std::vector<double>{1.0});
}

TEST_CASE("spectrum has n_fft/2+1 bins and Parseval-consistent scale") {
  std::vector<double> frame(200);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 0.3);
  for (auto& v : frame) v = gauss(rng);
  const auto mags = aer::dsp::spectrum(frame, 256, 0.97);
  CHECK(mags.size() == 129);
  for (double m : mags) CHECK(m >= 0.0);

  // Parseval: sum |X_k|^2 over the full circle equals n * sum x^2 of the
  // padded analysis frame.
  const auto af = aer::dsp::analysis_frame(frame, 0.97);
  double time_e = 0;
  for (double v : af) time_e += v * v;
  double freq_e = mags[0] * mags[0] + mags[128] * mags[128];
  for (std::size_t k = 1; k < 128; ++k) freq_e += 2.0 * mags[k] * mags[k];
  CHECK(freq_e == doctest::Approx(256.0 * time_e).epsilon(1e-9));
}

TEST_CASE("spectral centroid excludes DC and handles silence") {
  std::vector<double> mags(129, 0.0);
  CHECK(aer::dsp::spectral_centroid(mags, 16000, 256) == 0.0);
  mags[16] = 3.0;  // bin 16 = 1000 Hz at 16 kHz / 256
  CHECK(aer::dsp::spectral_centroid(mags, 16000, 256) == doctest::Approx(1000.0));
  mags[0] = 100.0;  // DC must not shift the centroid
  CHECK(aer::dsp::spectral_centroid(mags, 16000, 256) == doctest::Approx(1000.0));
}

TEST_CASE("band energy ratio splits squared magnitudes") {
  std::vector<double> mags(129, 0.0);
  mags[8] = 1.0;   // 500 Hz
  mags[64] = 2.0;  // 4000 Hz
  const double r = aer::dsp::band_energy_ratio(mags, 16000, 256, 2000.0);
  CHECK(r == doctest::Approx(1.0 / 5.0).epsilon(1e-12));
  CHECK(aer::dsp::band_energy_ratio(std::vector<double>(129, 0.0), 16000, 256, 2000.0) == 0.0);
  CHECK_THROWS_AS(aer::dsp::band_energy_ratio(mags, 16000, 256, 0.0), aer::ContractError);
  CHECK_THROWS_AS(aer::dsp::band_energy_ratio(mags, 16000, 256, 8000.0), aer::ContractError);
}

TEST_CASE("delta spectrum is L1 with a zero first frame") {
  std::vector<double> a = {1.0, 2.0, 3.0};
  std::vector<double> b = {2.0, 0.0, 3.5};
  CHECK(aer::dsp::delta_spectrum_magnitude(a, {}) == 0.0);
  CHECK(aer::dsp::delta_spectrum_magnitude(b, a) == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("zero crossing rate counts sign changes with sign(0) positive") {
  CHECK(aer::dsp::zero_crossing_rate(std::vector<double>{1, -1, 1, -1}) == doctest::Approx(1.0));
  CHECK(aer::dsp::zero_crossing_rate(std::vector<double>{0, 0, 0, 0}) == 0.0);
  CHECK(aer::dsp::zero_crossing_rate(std::vector<double>{0, 0, 1, -1}) ==
        doctest::Approx(1.0 / 3.0));
  CHECK(aer::dsp::zero_crossing_rate(std::vector<double>{5, 5, 5}) == 0.0);
}

TEST_CASE("short time energy is the mean square") {
  CHECK(aer::dsp::short_time_energy(std::vector<double>{1, -1, 2, 0}) ==
        doctest::Approx(6.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("pitch finds a 200 Hz sine exactly and rejects noise and silence") {
  const double rate = 16000.0;
  std::vector<double> sine(400);
  for (std::size_t t = 0; t < sine.size(); ++t) {
    sine[t] = std::sin(2.0 * std::numbers::pi * 200.0 * static_cast<double>(t) / rate);
  }
  CHECK(aer::dsp::pitch(sine, rate) == 200.0);  // lag exactly 80 samples

  CHECK(aer::dsp::pitch(std::vector<double>(400, 0.0), rate) == 0.0);

  // White noise must fall under the voicing threshold; seed frozen after
  // checking the margin (max normalized autocorrelation ~0.1 for n=400).
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> noise(400);
  for (auto& v : noise) v = gauss(rng);
  CHECK(aer::dsp::pitch(noise, rate) == 0.0);
}

TEST_CASE("pitch prefers the fundamental over its subharmonic") {
  const double rate = 16000.0;
  // 100 Hz square wave: lags 160 and 320 both align periods, but the shorter
  // lag keeps more product terms, so the fundamental wins.
  std::vector<double> x(800);
  for (std::size_t t = 0; t < x.size(); ++t) {
    x[t] = std::sin(2.0 * std::numbers::pi * 100.0 * static_cast<double>(t) / rate) > 0 ? 1.0
                                                                                        : -1.0;
  }
  CHECK(aer::dsp::pitch(x, rate) == doctest::Approx(100.0));
}

TEST_CASE("silence ratio compares frame RMS against half the mean RMS") {
  std::vector<std::vector<double>> frames = {
      std::vector<double>(100, 1.0),   // RMS 1
      std::vector<double>(100, 1.0),   // RMS 1
      std::vector<double>(100, 0.01),  // RMS 0.01 < 0.5 * mean
  };
  CHECK(aer::dsp::silence_ratio(frames) == doctest::Approx(1.0 / 3.0));
  CHECK(aer::dsp::silence_ratio({std::vector<double>(10, 0.0)}) == 1.0);
  CHECK(aer::dsp::silence_ratio({std::vector<double>(10, 0.5),
                                 std::vector<double>(10, 0.5)}) == 0.0);
}
