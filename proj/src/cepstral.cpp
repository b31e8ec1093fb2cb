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

#include "aer/cepstral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "aer/common.hpp"

namespace aer::cepstral {

namespace {

double hz_to_mel(double f) { return 2595.0 * std::log10(1.0 + f / 700.0); }
double mel_to_hz(double m) { return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0); }

}  // namespace

MelFilterbank make_mel_filterbank(std::size_t n_filters, std::size_t n_fft, double sample_rate) {
  if (n_filters == 0 || n_fft == 0 || sample_rate <= 0) {
    throw ContractError("invalid mel filterbank parameters");
  }
  MelFilterbank fb;
  fb.n_filters = n_filters;
  fb.n_fft = n_fft;
  fb.sample_rate = sample_rate;

  const std::size_t n_bins = n_fft / 2 + 1;
  const double mel_max = hz_to_mel(sample_rate / 2.0);
  std::vector<double> edges(n_filters + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = mel_to_hz(mel_max * static_cast<double>(i) / static_cast<double>(n_filters + 1));
  }

  fb.weights.assign(n_filters, std::vector<double>(n_bins, 0.0));
  const double bin_hz = sample_rate / static_cast<double>(n_fft);
  for (std::size_t m = 0; m < n_filters; ++m) {
    const double lo = edges[m], mid = edges[m + 1], hi = edges[m + 2];
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * bin_hz;
      if (f > lo && f < mid) {
        fb.weights[m][k] = (f - lo) / (mid - lo);
      } else if (f == mid) {
        fb.weights[m][k] = 1.0;
      } else if (f > mid && f < hi) {
        fb.weights[m][k] = (hi - f) / (hi - mid);
      }
    }
  }
  return fb;
}

std::vector<double> mfcc(std::span<const double> mags, const MelFilterbank& fb,
                         std::size_t n_keep) {
  if (mags.size() != fb.n_fft / 2 + 1) {
    throw ContractError("spectrum length does not match filterbank");
  }
  const std::size_t M = fb.n_filters;
  std::vector<double> log_e(M);
  for (std::size_t m = 0; m < M; ++m) {
    double e = 0;
    for (std::size_t k = 0; k < mags.size(); ++k) {
      e += fb.weights[m][k] * mags[k] * mags[k];
    }
    log_e[m] = std::log(std::max(e, 1e-10));
  }

  // Orthonormal DCT-II, keeping c_1..c_n_keep.
  std::vector<double> c(n_keep);
  const double scale = std::sqrt(2.0 / static_cast<double>(M));
  for (std::size_t i = 1; i <= n_keep; ++i) {
    double acc = 0;
    for (std::size_t m = 0; m < M; ++m) {
      acc += log_e[m] * std::cos(std::numbers::pi * static_cast<double>(i) *
                                 (static_cast<double>(m) + 0.5) / static_cast<double>(M));
    }
    c[i - 1] = scale * acc;
  }
  return c;
}

std::vector<std::vector<double>> delta(const std::vector<std::vector<double>>& series) {
  if (series.empty()) return {};
  const std::size_t T = series.size();
  const std::size_t F = series[0].size();
  auto clamped = [&](std::ptrdiff_t t) -> const std::vector<double>& {
    if (t < 0) return series.front();
    if (t >= static_cast<std::ptrdiff_t>(T)) return series.back();
    return series[static_cast<std::size_t>(t)];
  };

  std::vector<std::vector<double>> out(T, std::vector<double>(F, 0.0));
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t f = 0; f < F; ++f) {
      double acc = 0;
      for (int n = 1; n <= 2; ++n) {
        acc += n * (clamped(static_cast<std::ptrdiff_t>(t) + n)[f] -
                    clamped(static_cast<std::ptrdiff_t>(t) - n)[f]);
      }
      out[t][f] = acc / 10.0;
    }
  }
  return out;
}

LpcModel lpc(std::span<const double> frame, std::size_t order) {
  if (frame.empty()) throw ContractError("lpc needs a non-empty frame");
  std::vector<double> r(order + 1, 0.0);
  for (std::size_t j = 0; j <= order; ++j) {
    double acc = 0;
    for (std::size_t n = j; n < frame.size(); ++n) acc += frame[n] * frame[n - j];
    r[j] = acc;
  }
  return lpc_from_autocorr(r, order);
}

LpcModel lpc_from_autocorr(std::span<const double> r, std::size_t order) {
  if (r.size() < order + 1) throw ContractError("autocorrelation too short for order");
  LpcModel model;
  model.a.assign(order, 0.0);
  if (r[0] <= 0.0) return model;  // silent frame: all-zero predictor

  // Levinson-Durbin. a[] holds a_1..a_order in x[n] ~ sum a_k x[n-k].
  double err = r[0];
  for (std::size_t i = 1; i <= order; ++i) {
    double acc = r[i];
    for (std::size_t j = 1; j < i; ++j) acc -= model.a[j - 1] * r[i - j];
    const double k = acc / err;
    model.reflection.push_back(k);

    std::vector<double> prev(model.a.begin(), model.a.begin() + static_cast<std::ptrdiff_t>(i - 1));
    model.a[i - 1] = k;
    for (std::size_t j = 1; j < i; ++j) {
      model.a[j - 1] = prev[j - 1] - k * prev[i - 1 - j];
    }
    err *= (1.0 - k * k);
    if (err <= 0.0) break;  // perfectly predictable; higher orders stay 0
  }
  model.gain = std::max(err, 0.0);
  return model;
}

std::vector<double> lpcc(const LpcModel& model, std::size_t n_coeffs) {
  const auto order = model.a.size();
  if (order == 0) throw ContractError("lpcc needs model order >= 1");
  auto a = [&](std::size_t j) { return j >= 1 && j <= order ? model.a[j - 1] : 0.0; };

  std::vector<double> c(n_coeffs, 0.0);
  for (std::size_t n = 1; n <= n_coeffs; ++n) {
    double acc = a(n);
    for (std::size_t k = 1; k < n; ++k) {
      acc += (static_cast<double>(k) / static_cast<double>(n)) * c[k - 1] * a(n - k);
    }
    c[n - 1] = acc;
  }
  return c;
}

std::vector<double> formants(const LpcModel& model, double sample_rate, std::size_t n_slots) {
  std::vector<double> out(n_slots, 0.0);
  if (model.a.size() < 2) return out;  // no conjugate pair possible

  // Roots of z^p - a_1 z^{p-1} - ... - a_p; trailing zero coefficients only
  // add roots at z = 0, so reduce the degree first.
  std::size_t degree = model.a.size();
  while (degree > 0 && model.a[degree - 1] == 0.0) --degree;
  if (degree == 0) return out;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(degree),
                                                    static_cast<Eigen::Index>(degree));
  for (std::size_t j = 0; j < degree; ++j) {
    companion(0, static_cast<Eigen::Index>(j)) = model.a[j];
  }
  for (std::size_t j = 1; j < degree; ++j) {
    companion(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j - 1)) = 1.0;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver;
  solver.setMaxIterations(500);
  solver.compute(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) return out;  // non-convergent: no formants

  std::vector<double> freqs;
  const double nyquist = sample_rate / 2.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const std::complex<double> z = solver.eigenvalues()[i];
    if (z.imag() <= 0.0) continue;
    const double mag = std::abs(z);
    if (mag <= 0.0) continue;
    const double bandwidth = -(sample_rate / std::numbers::pi) * std::log(mag);
    if (bandwidth >= 400.0) continue;
    const double freq = sample_rate / (2.0 * std::numbers::pi) * std::arg(z);
    if (freq < 90.0 || freq > nyquist - 50.0) continue;
    freqs.push_back(freq);
  }
  std::sort(freqs.begin(), freqs.end());
  for (std::size_t i = 0; i < n_slots && i < freqs.size(); ++i) out[i] = freqs[i];
  return out;
}

}  // namespace aer::cepstral
