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

#include <cstddef>
#include <span>
#include <vector>

namespace aer::cepstral {

// Triangular mel filterbank over the n_fft/2+1 magnitude bins, mel-spaced
// from 0 Hz to sample_rate/2 using m = 2595*log10(1 + f/700).
struct MelFilterbank {
  std::size_t n_filters = 0;
  std::size_t n_fft = 0;
  double sample_rate = 0;
  std::vector<std::vector<double>> weights;  // [filter][bin]
};

MelFilterbank make_mel_filterbank(std::size_t n_filters, std::size_t n_fft, double sample_rate);

// c_1..c_n_keep of the frame: filter energies E_m = sum fb_m(k)|X_k|^2,
// L_m = ln(max(E_m, 1e-10)), orthonormal DCT-II of L, c_0 dropped.
std::vector<double> mfcc(std::span<const double> mags, const MelFilterbank& fb,
                         std::size_t n_keep = 12);

// Regression delta over +-2 frames with edge replication:
// d_t = sum_{n=1..2} n*(c_{t+n} - c_{t-n}) / 10.
std::vector<std::vector<double>> delta(const std::vector<std::vector<double>>& series);

struct LpcModel {
  std::vector<double> a;           // a_1..a_order in x[n] ~ sum a_k x[n-k]
  std::vector<double> reflection;  // |k_i| < 1 for positive-definite input
  double gain = 0;                 // final prediction-error power, >= 0
};

// Levinson-Durbin on the biased autocorrelation of the (pre-emphasized,
// windowed) frame. r_0 = 0 yields all-zero coefficients; the recursion stops
// early if the error power reaches 0.
LpcModel lpc(std::span<const double> frame, std::size_t order = 12);

// Levinson-Durbin on a given autocorrelation sequence r_0..r_order.
LpcModel lpc_from_autocorr(std::span<const double> r, std::size_t order);

// Cepstrum of the all-pole model: c_1 = a_1;
// c_n = a_n + sum_{k=1}^{n-1} (k/n) c_k a_{n-k}, a_j = 0 past the order.
std::vector<double> lpcc(const LpcModel& model, std::size_t n_coeffs = 11);

// Formant frequencies from the roots of 1 - sum a_k z^-k (companion-matrix
// eigenvalues). Keeps roots with Im > 0, bandwidth -(rate/pi)ln|z| < 400 Hz,
// frequency in [90, rate/2 - 50]; ascending, zero-padded to 5 slots.
// A non-convergent eigensolver yields all zeros for the frame.
std::vector<double> formants(const LpcModel& model, double sample_rate,
                             std::size_t n_slots = 5);

}  // namespace aer::cepstral
