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

#include "aer/metrics.hpp"

#include <cmath>
#include <cstddef>

#include "aer/common.hpp"

namespace aer {

namespace {

struct Moments {
  double mean_y = 0, mean_yh = 0, var_y = 0, var_yh = 0, cov = 0;
};

Moments population_moments(std::span<const double> y, std::span<const double> y_hat) {
  const auto n = static_cast<double>(y.size());
  Moments m;
  for (std::size_t i = 0; i < y.size(); ++i) {
    m.mean_y += y[i];
    m.mean_yh += y_hat[i];
  }
  m.mean_y /= n;
  m.mean_yh /= n;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double dy = y[i] - m.mean_y;
    const double dyh = y_hat[i] - m.mean_yh;
    m.var_y += dy * dy;
    m.var_yh += dyh * dyh;
    m.cov += dy * dyh;
  }
  m.var_y /= n;
  m.var_yh /= n;
  m.cov /= n;
  return m;
}

void check_pair(std::span<const double> y, std::span<const double> y_hat) {
  if (y.size() != y_hat.size()) throw ContractError("paired series length mismatch");
  if (y.size() < 2) throw ContractError("paired series need at least 2 points");
}

}  // namespace

double ccc(std::span<const double> y, std::span<const double> y_hat) {
  check_pair(y, y_hat);
  bool identical = true;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != y_hat[i]) {
      identical = false;
      break;
    }
  }
  if (identical) return 1.0;

  const Moments m = population_moments(y, y_hat);
  const double mean_diff = m.mean_y - m.mean_yh;
  const double denom = m.var_y + m.var_yh + mean_diff * mean_diff;
  if (denom <= 0.0) return 0.0;
  return 2.0 * m.cov / denom;
}

double mse(std::span<const double> y, std::span<const double> y_hat) {
  if (y.size() != y_hat.size()) throw ContractError("paired series length mismatch");
  if (y.empty()) throw ContractError("mse of empty series");
  double acc = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - y_hat[i];
    acc += d * d;
  }
  return acc / static_cast<double>(y.size());
}

PearsonResult pearson(std::span<const double> y, std::span<const double> y_hat) {
  check_pair(y, y_hat);
  const Moments m = population_moments(y, y_hat);
  if (m.var_y <= 0.0 || m.var_yh <= 0.0) {
    return {0.0, true};
  }
  return {m.cov / std::sqrt(m.var_y * m.var_yh), false};
}

}  // namespace aer
