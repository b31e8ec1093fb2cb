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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace aer::dsp {

// In-place radix-2 FFT; a.size() must be a power of two.
void fft(std::vector<std::complex<double>>& a);

// y[n] = x[n] - coeff * x[n-1], with x[-1] taken as 0.
std::vector<double> preemphasis(std::span<const double> x, double coeff);

// Hamming window of length n: 0.54 - 0.46 cos(2*pi*i/(n-1)); n == 1 yields {1}.
std::vector<double> hamming_window(std::size_t n);

// Magnitude spectrum |X_k| for k = 0..n_fft/2 of a frame that is
// pre-emphasized, Hamming-windowed, and zero-padded to n_fft.
// The frame must not be longer than n_fft.
std::vector<double> spectrum(std::span<const double> frame, std::size_t n_fft,
                             double preemph_coeff);

// Pre-emphasized, Hamming-windowed copy of the frame (the LPC front end,
// identical to what spectrum() transforms).
std::vector<double> analysis_frame(std::span<const double> frame, double preemph_coeff);

// sum_k f_k|X_k| / sum_k |X_k| over k = 1..n_fft/2 (DC excluded); 0 if the
// magnitudes are all zero.
double spectral_centroid(std::span<const double> mags, double sample_rate, std::size_t n_fft);

// sum of |X_k|^2 with f_k < split_hz over sum of all |X_k|^2, k >= 1;
// 0 if total energy is 0. Requires 0 < split_hz < sample_rate/2.
double band_energy_ratio(std::span<const double> mags, double sample_rate, std::size_t n_fft,
                         double split_hz);

// L1 distance between consecutive magnitude spectra; by convention 0 for the
// first frame (empty prev).
double delta_spectrum_magnitude(std::span<const double> mags, std::span<const double> prev);

// Sign changes per sample transition, sign(0) treated as +. Frame length >= 2.
double zero_crossing_rate(std::span<const double> frame);

// Mean of squared samples.
double short_time_energy(std::span<const double> frame);

// Autocorrelation pitch: rho(tau) = sum x[n]x[n-tau] / sum x[n]^2 over
// tau in [rate/max_hz, rate/min_hz], lags past the frame end skipped.
// Returns rate/argmax tau, or 0 when max rho < threshold (unvoiced).
double pitch(std::span<const double> frame, double sample_rate, double min_hz = 50.0,
             double max_hz = 500.0, double voicing_threshold = 0.3);

// Fraction of frames whose RMS < 0.5 * mean RMS; 1.0 when mean RMS is 0.
double silence_ratio(const std::vector<std::vector<double>>& frames);

}  // namespace aer::dsp
