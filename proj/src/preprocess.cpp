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

#include "aer/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "aer/csv.hpp"

namespace aer {

double percentile_nearest_rank(std::span<const double> values, double p) {
  if (values.empty()) throw ContractError("percentile of empty data");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

ScalerParams fit_scaler(const Matrix& train, double p_low, double p_high) {
  if (train.rows == 0 || train.cols == 0) throw ContractError("cannot fit scaler on empty matrix");
  if (p_low > p_high) throw ContractError("p_low must not exceed p_high");

  ScalerParams params;
  params.p_low.resize(train.cols);
  params.p_high.resize(train.cols);
  params.min.resize(train.cols);
  params.max.resize(train.cols);

  std::vector<double> column(train.rows);
  for (std::size_t c = 0; c < train.cols; ++c) {
    for (std::size_t r = 0; r < train.rows; ++r) column[r] = train.at(r, c);
    const double lo = percentile_nearest_rank(column, p_low);
    const double hi = percentile_nearest_rank(column, p_high);
    params.p_low[c] = lo;
    params.p_high[c] = hi;
    // Post-clip extrema of the training column.
    double mn = std::clamp(column[0], lo, hi);
    double mx = mn;
    for (double v : column) {
      const double clipped = std::clamp(v, lo, hi);
      mn = std::min(mn, clipped);
      mx = std::max(mx, clipped);
    }
    params.min[c] = mn;
    params.max[c] = mx;
  }
  return params;
}

void transform(Matrix& features, const ScalerParams& params) {
  if (features.cols != params.cols()) {
    throw ContractError("scaler fitted for " + std::to_string(params.cols()) +
                        " columns, got " + std::to_string(features.cols));
  }
  for (std::size_t r = 0; r < features.rows; ++r) {
    for (std::size_t c = 0; c < features.cols; ++c) {
      const double clipped = std::clamp(features.at(r, c), params.p_low[c], params.p_high[c]);
      const double range = params.max[c] - params.min[c];
      features.at(r, c) = range > 0 ? (clipped - params.min[c]) / range : 0.0;
    }
  }
}

void save_scaler(const std::filesystem::path& path, const ScalerParams& params) {
  std::vector<std::string> lines = {"feature_index,p_low,p_high,min,max"};
  for (std::size_t c = 0; c < params.cols(); ++c) {
    lines.push_back(std::to_string(c) + ',' + format_double(params.p_low[c]) + ',' +
                    format_double(params.p_high[c]) + ',' + format_double(params.min[c]) + ',' +
                    format_double(params.max[c]));
  }
  write_lines(path, lines);
}

ScalerParams load_scaler(const std::filesystem::path& path) {
  CsvFile csv = read_csv(path);
  const std::vector<std::string> expected = {"feature_index", "p_low", "p_high", "min", "max"};
  if (csv.header != expected) throw ContractError("bad scaler header: " + path.string());
  ScalerParams params;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto& row = csv.rows[i];
    if (parse_double(row[0]) != static_cast<double>(i)) {
      throw ContractError("scaler rows must be ordered by feature index: " + path.string());
    }
    params.p_low.push_back(parse_double(row[1], "scaler"));
    params.p_high.push_back(parse_double(row[2], "scaler"));
    params.min.push_back(parse_double(row[3], "scaler"));
    params.max.push_back(parse_double(row[4], "scaler"));
  }
  return params;
}

}  // namespace aer
