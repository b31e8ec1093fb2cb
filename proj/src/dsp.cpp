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

#include "aer/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aer/common.hpp"

namespace aer::dsp {

void fft(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw ContractError("fft size must be a power of two");
  }
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<double> preemphasis(std::span<const double> x, double coeff) {
  std::vector<double> y(x.size());
  double prev = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    y[n] = x[n] - coeff * prev;
    prev = x[n];
  }
  return y;
}

std::vector<double> hamming_window(std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (n < 2) return w;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(n - 1));
  }
  return w;
}

std::vector<double> analysis_frame(std::span<const double> frame, double preemph_coeff) {
  std::vector<double> y = preemphasis(frame, preemph_coeff);
  std::vector<double> w = hamming_window(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] *= w[i];
  return y;
}

std::vector<double> spectrum(std::span<const double> frame, std::size_t n_fft,
                             double preemph_coeff) {
  if (frame.size() > n_fft) {
    throw ContractError("frame longer than FFT size");
  }
  std::vector<double> y = analysis_frame(frame, preemph_coeff);
  std::vector<std::complex<double>> buf(n_fft, {0.0, 0.0});
  for (std::size_t i = 0; i < y.size(); ++i) buf[i] = y[i];
  fft(buf);
  std::vector<double> mags(n_fft / 2 + 1);
  for (std::size_t k = 0; k < mags.size(); ++k) mags[k] = std::abs(buf[k]);
  return mags;
}

double spectral_centroid(std::span<const double> mags, double sample_rate, std::size_t n_fft) {
  const double bin_hz = sample_rate / static_cast<double>(n_fft);
  double num = 0, den = 0;
  for (std::size_t k = 1; k < mags.size(); ++k) {
    num += static_cast<double>(k) * bin_hz * mags[k];
    den += mags[k];
  }
  return den > 0 ? num / den : 0.0;
}

double band_energy_ratio(std::span<const double> mags, double sample_rate, std::size_t n_fft,
                         double split_hz) {
  if (!(split_hz > 0.0) || !(split_hz < sample_rate / 2.0)) {
    throw ContractError("band split must lie in (0, sample_rate/2)");
  }
  const double bin_hz = sample_rate / static_cast<double>(n_fft);
  double low = 0, total = 0;
  for (std::size_t k = 1; k < mags.size(); ++k) {
    const double e = mags[k] * mags[k];
    total += e;
    if (static_cast<double>(k) * bin_hz < split_hz) low += e;
  }
  return total > 0 ? low / total : 0.0;
}

double delta_spectrum_magnitude(std::span<const double> mags, std::span<const double> prev) {
  if (prev.empty()) return 0.0;
  if (prev.size() != mags.size()) throw ContractError("spectrum length mismatch");
  double acc = 0;
  for (std::size_t k = 0; k < mags.size(); ++k) acc += std::abs(mags[k] - prev[k]);
  return acc;
}

double zero_crossing_rate(std::span<const double> frame) {
  if (frame.size() < 2) return 0.0;
  auto sign_pos = [](double v) { return v >= 0.0; };  // sign(0) = +
  std::size_t changes = 0;
  for (std::size_t n = 1; n < frame.size(); ++n) {
    if (sign_pos(frame[n]) != sign_pos(frame[n - 1])) ++changes;
  }
  return static_cast<double>(changes) / static_cast<double>(frame.size() - 1);
}

double short_time_energy(std::span<const double> frame) {
  if (frame.empty()) return 0.0;
  double acc = 0;
  for (double v : frame) acc += v * v;
  return acc / static_cast<double>(frame.size());
}

double pitch(std::span<const double> frame, double sample_rate, double min_hz, double max_hz,
             double voicing_threshold) {
  const std::size_t len = frame.size();
  double energy = 0;
  for (double v : frame) energy += v * v;
  if (energy <= 0.0) return 0.0;

  const auto lag_lo = static_cast<std::size_t>(std::ceil(sample_rate / max_hz));
  const auto lag_hi = static_cast<std::size_t>(std::floor(sample_rate / min_hz));

  double best_rho = 0;
  std::size_t best_lag = 0;
  for (std::size_t tau = lag_lo; tau <= lag_hi && tau < len; ++tau) {
    double acc = 0;
    for (std::size_t n = tau; n < len; ++n) acc += frame[n] * frame[n - tau];
    const double rho = acc / energy;
    if (rho > best_rho) {
      best_rho = rho;
      best_lag = tau;
    }
  }
  if (best_lag == 0 || best_rho < voicing_threshold) return 0.0;
  return sample_rate / static_cast<double>(best_lag);
}

double silence_ratio(const std::vector<std::vector<double>>& frames) {
  if (frames.empty()) throw ContractError("silence ratio needs at least one frame");
  std::vector<double> rms(frames.size());
  double mean = 0;
  for (std::size_t t = 0; t < frames.size(); ++t) {
    rms[t] = std::sqrt(short_time_energy(frames[t]));
    mean += rms[t];
  }
  mean /= static_cast<double>(frames.size());
  if (mean <= 0.0) return 1.0;
  const double threshold = 0.5 * mean;
  std::size_t quiet = 0;
  for (double r : rms) {
    if (r < threshold) ++quiet;
  }
  return static_cast<double>(quiet) / static_cast<double>(frames.size());
}

}  // namespace aer::dsp
