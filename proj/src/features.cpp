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

#include "aer/features.hpp"

#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aer/csv.hpp"
#include "aer/dsp.hpp"

namespace aer {

namespace {

// Population mean/variance of v; (0, 0) for an empty selection.
std::pair<double, double> mean_var(std::span<const double> v) {
  if (v.empty()) return {0.0, 0.0};
  double mean = 0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(v.size());
  return {mean, var};
}

std::vector<std::string> build_feature_names() {
  std::vector<std::string> names;
  names.reserve(kFeatureCount);
  const char* lowlevel[] = {"centroid", "band_ratio", "delta_spec", "zcr", "energy", "pitch"};
  char buf[64];
  auto push = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof(buf), fmt, static_cast<int>(names.size()), args...);
    names.emplace_back(buf);
  };
  for (const char* base : lowlevel) {
    push("f%02d_%s_mean", base);
    push("f%02d_%s_var", base);
  }
  push("f%02d_silence_ratio");
  for (int i = 1; i <= 12; ++i) push("f%02d_mfcc%d_mean", i);
  for (int i = 1; i <= 12; ++i) push("f%02d_mfcc%d_var", i);
  for (int i = 1; i <= 12; ++i) push("f%02d_dmfcc%d_mean", i);
  for (int i = 1; i <= 11; ++i) push("f%02d_lpcc%d_mean", i);
  for (int i = 1; i <= 11; ++i) push("f%02d_lpcc%d_var", i);
  for (int i = 1; i <= 5; ++i) push("f%02d_formant%d_mean", i);
  return names;
}

}  // namespace

const std::vector<std::string>& feature_names() {
  static const std::vector<std::string> names = build_feature_names();
  return names;
}

FeatureVector extract_utterance(std::span<const double> samples, const ExtractParams& p,
                                const cepstral::MelFilterbank& fb) {
  const auto frames = frame_signal(samples, p.window_len, p.hop);
  const std::size_t T = frames.size();

  std::vector<double> centroid(T), band_ratio(T), delta_spec(T), zcr(T), energy(T), pitches(T);
  std::vector<std::vector<double>> mfccs(T), lpccs(T), formant_rows(T);

  std::vector<double> prev_mags;
  for (std::size_t t = 0; t < T; ++t) {
    const auto& frame = frames[t];
    auto mags = dsp::spectrum(frame, p.n_fft, p.preemphasis);

    centroid[t] = dsp::spectral_centroid(mags, p.sample_rate, p.n_fft);
    band_ratio[t] = dsp::band_energy_ratio(mags, p.sample_rate, p.n_fft, p.band_split_hz);
    delta_spec[t] = dsp::delta_spectrum_magnitude(mags, prev_mags);
    zcr[t] = dsp::zero_crossing_rate(frame);
    energy[t] = dsp::short_time_energy(frame);
    pitches[t] = dsp::pitch(frame, p.sample_rate, p.pitch_min_hz, p.pitch_max_hz,
                            p.voicing_threshold);

    mfccs[t] = cepstral::mfcc(mags, fb, 12);
    const auto analysis = dsp::analysis_frame(frame, p.preemphasis);
    const auto lpc_model = cepstral::lpc(analysis, p.lpc_order);
    lpccs[t] = cepstral::lpcc(lpc_model, 11);
    formant_rows[t] = cepstral::formants(lpc_model, p.sample_rate, 5);

    prev_mags = std::move(mags);
  }
  const auto dmfccs = cepstral::delta(mfccs);

  FeatureVector out{};
  std::size_t idx = 0;
  auto put_stats = [&](std::span<const double> v) {
    auto [m, var] = mean_var(v);
    out[idx++] = m;
    out[idx++] = var;
  };
  put_stats(centroid);
  put_stats(band_ratio);
  put_stats(delta_spec);
  put_stats(zcr);
  put_stats(energy);

  // Pitch statistics run over voiced frames only.
  std::vector<double> voiced;
  for (double f0 : pitches) {
    if (f0 > 0.0) voiced.push_back(f0);
  }
  put_stats(voiced);

  out[idx++] = dsp::silence_ratio(frames);

  auto column = [&](const std::vector<std::vector<double>>& rows, std::size_t c) {
    std::vector<double> v(rows.size());
    for (std::size_t t = 0; t < rows.size(); ++t) v[t] = rows[t][c];
    return v;
  };

  std::vector<std::array<double, 2>> mfcc_stats(12);
  for (std::size_t c = 0; c < 12; ++c) {
    auto [m, var] = mean_var(column(mfccs, c));
    mfcc_stats[c] = {m, var};
  }
  for (std::size_t c = 0; c < 12; ++c) out[idx++] = mfcc_stats[c][0];
  for (std::size_t c = 0; c < 12; ++c) out[idx++] = mfcc_stats[c][1];
  for (std::size_t c = 0; c < 12; ++c) out[idx++] = mean_var(column(dmfccs, c)).first;

  std::vector<std::array<double, 2>> lpcc_stats(11);
  for (std::size_t c = 0; c < 11; ++c) {
    auto [m, var] = mean_var(column(lpccs, c));
    lpcc_stats[c] = {m, var};
  }
  for (std::size_t c = 0; c < 11; ++c) out[idx++] = lpcc_stats[c][0];
  for (std::size_t c = 0; c < 11; ++c) out[idx++] = lpcc_stats[c][1];

  // Each formant averages over the frames where it is present (nonzero).
  for (std::size_t c = 0; c < 5; ++c) {
    std::vector<double> present;
    for (std::size_t t = 0; t < T; ++t) {
      if (formant_rows[t][c] > 0.0) present.push_back(formant_rows[t][c]);
    }
    out[idx++] = mean_var(present).first;
  }
  return out;
}

namespace {

Table extract_impl(const std::vector<Signal>& signals, const std::vector<std::string>& ids,
                   const ExtractParams& p, bool parallel) {
  if (signals.size() != ids.size()) throw ContractError("signals/ids size mismatch");
  const auto fb = cepstral::make_mel_filterbank(p.n_mels, p.n_fft, p.sample_rate);

  Table t;
  t.ids = ids;
  t.m = Matrix(signals.size(), kFeatureCount);

  // Each utterance writes only its own row, so thread count and schedule
  // cannot change the result.
  const auto n = static_cast<std::ptrdiff_t>(signals.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto row = extract_utterance(signals[static_cast<std::size_t>(i)].samples, p, fb);
    std::copy(row.begin(), row.end(), t.m.row(static_cast<std::size_t>(i)).begin());
  }
  return t;
}

}  // namespace

Table extract_table(const std::vector<Signal>& signals, const std::vector<std::string>& ids,
                    const ExtractParams& p) {
  return extract_impl(signals, ids, p, true);
}

Table extract_table_serial(const std::vector<Signal>& signals,
                           const std::vector<std::string>& ids, const ExtractParams& p) {
  return extract_impl(signals, ids, p, false);
}

void save_features(const std::filesystem::path& path, const Table& t) {
  if (t.m.cols != kFeatureCount) throw ContractError("feature table must have 76 columns");
  std::vector<std::string> lines;
  lines.reserve(t.ids.size() + 1);
  std::string header = "utterance_id";
  for (const auto& name : feature_names()) {
    header += ',';
    header += name;
  }
  lines.push_back(std::move(header));
  for (std::size_t r = 0; r < t.ids.size(); ++r) {
    std::string line = t.ids[r];
    for (double v : t.m.row(r)) {
      line += ',';
      line += format_double(v);
    }
    lines.push_back(std::move(line));
  }
  write_lines(path, lines);
}

Table load_features(const std::filesystem::path& path) {
  CsvFile csv = read_csv(path);
  if (csv.header.size() != kFeatureCount + 1 || csv.header[0] != "utterance_id") {
    throw ContractError("feature CSV must have utterance_id plus 76 feature columns: " +
                        path.string());
  }
  Table t;
  t.m = Matrix(csv.rows.size(), kFeatureCount);
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    t.ids.push_back(csv.rows[r][0]);
    for (std::size_t c = 0; c < kFeatureCount; ++c) {
      t.m.at(r, c) = parse_double(csv.rows[r][c + 1], "feature CSV " + path.string());
    }
  }
  return t;
}

}  // namespace aer
