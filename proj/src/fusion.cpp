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

#include "aer/fusion.hpp"

#include <algorithm>
#include <cmath>

namespace aer {

namespace {

constexpr double kPowerTol = 1e-14;
constexpr std::size_t kPowerMaxSteps = 10000;
constexpr double kDiagTol = 1e-13;
constexpr std::size_t kMaxSweeps = 10000;

// Leading eigenpair by power iteration; converges when the direction settles
// up to sign. Throws past kPowerMaxSteps.
std::pair<double, std::vector<double>> leading_eigenpair(const Matrix& q) {
  const std::size_t m = q.rows;
  std::vector<double> v(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> w(m);
  for (std::size_t step = 0; step < kPowerMaxSteps; ++step) {
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += q.at(i, j) * v[j];
      w[i] = acc;
    }
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      return {0.0, std::move(v)};  // v is in the null space; eigenvalue 0
    }
    for (double& x : w) x /= norm;

    double diff_plus = 0, diff_minus = 0;
    for (std::size_t i = 0; i < m; ++i) {
      diff_plus = std::max(diff_plus, std::abs(w[i] - v[i]));
      diff_minus = std::max(diff_minus, std::abs(w[i] + v[i]));
    }
    v = w;
    if (std::min(diff_plus, diff_minus) < kPowerTol) {
      double lambda = 0;  // Rayleigh quotient of the settled direction
      for (std::size_t i = 0; i < m; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += q.at(i, j) * v[j];
        lambda += v[i] * acc;
      }
      return {lambda, std::move(v)};
    }
  }
  throw ContractError("power iteration did not settle within 10000 steps");
}

}  // namespace

Matrix row_covariance(const Matrix& P) {
  const std::size_t m = P.rows, n = P.cols;
  if (n < 2) throw ContractError("covariance needs at least 2 columns");
  std::vector<double> mean(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (double v : P.row(i)) mean[i] += v;
    mean[i] /= static_cast<double>(n);
  }
  Matrix q(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        acc += (P.at(i, c) - mean[i]) * (P.at(j, c) - mean[j]);
      }
      acc /= static_cast<double>(n - 1);
      q.at(i, j) = acc;
      q.at(j, i) = acc;
    }
  }
  return q;
}

Rank1Completion complete_rank1(Matrix q) {
  const std::size_t m = q.rows;
  if (m < 2 || q.cols != m) throw ContractError("completion needs a square matrix, M >= 2");

  // Seed each diagonal entry with the row's largest |off-diagonal|.
  for (std::size_t i = 0; i < m; ++i) {
    double best = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) best = std::max(best, std::abs(q.at(i, j)));
    }
    q.at(i, i) = best;
  }

  Rank1Completion out;
  for (out.sweeps = 1; out.sweeps <= kMaxSweeps; ++out.sweeps) {
    auto [lambda, v] = leading_eigenpair(q);
    out.lambda = lambda;
    out.v = std::move(v);
    double change = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double updated = lambda * out.v[i] * out.v[i];
      change = std::max(change, std::abs(updated - q.at(i, i)));
      q.at(i, i) = updated;
    }
    if (change < kDiagTol) break;
  }
  out.sweeps = std::min(out.sweeps, kMaxSweeps);

  out.diag.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.diag[i] = q.at(i, i);

  out.factor.resize(m);
  const double root = std::sqrt(std::max(out.lambda, 0.0));
  double sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    out.factor[i] = root * out.v[i];
    sum += out.factor[i];
  }
  if (sum < 0) {
    for (std::size_t i = 0; i < m; ++i) {
      out.factor[i] = -out.factor[i];
      out.v[i] = -out.v[i];
    }
  }
  return out;
}

std::vector<double> estimate_accuracies(const Matrix& P) {
  const std::size_t m = P.rows;
  if (m < 3) throw ContractError("accuracy estimation needs at least 3 models");
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = P.row(i);
    const bool constant = std::all_of(row.begin(), row.end(),
                                      [&](double v) { return v == row[0]; });
    if (constant) throw ContractError("constant prediction row defeats covariance estimation");
  }

  const Matrix q = row_covariance(P);
  const Rank1Completion comp = complete_rank1(q);

  std::vector<double> r(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = comp.factor[i];
    const double signal = s * s;
    // Private-noise variance; floored so noise-free rows rank uniformly
    // enormous instead of dividing by zero.
    const double noise = std::max(q.at(i, i) - signal, std::max(1e-15, 1e-9 * q.at(i, i)));
    r[i] = (s < 0 ? -1.0 : 1.0) * signal / noise;
  }
  return r;
}

FusionResult smlr_fuse(const PredictionSet& preds, const std::vector<std::string>& exclude) {
  const std::size_t m = preds.P.rows;
  if (m != preds.model_names.size()) throw ContractError("prediction rows/names mismatch");
  if (preds.P.cols != preds.utterance_ids.size()) {
    throw ContractError("prediction columns/utterance ids mismatch");
  }

  for (const auto& name : exclude) {
    if (std::find(preds.model_names.begin(), preds.model_names.end(), name) ==
        preds.model_names.end()) {
      throw ContractError("unknown model in exclusion list: " + name);
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::find(exclude.begin(), exclude.end(), preds.model_names[i]) == exclude.end()) {
      kept.push_back(i);
    }
  }
  if (kept.empty()) throw ContractError("exclusion removed every model");

  FusionResult result;
  for (std::size_t i : kept) result.model_names.push_back(preds.model_names[i]);
  const std::size_t mk = kept.size();

  if (mk == 1) {
    result.weights = {1.0};
    result.accuracies = {0.0};
    result.fused.assign(preds.P.row(kept[0]).begin(), preds.P.row(kept[0]).end());
    return result;
  }

  if (mk == 2) {
    result.two_model_warning = true;
    result.weights = {0.5, 0.5};
    result.accuracies = {0.0, 0.0};
  } else {
    Matrix sub(mk, preds.P.cols);
    for (std::size_t i = 0; i < mk; ++i) {
      const auto row = preds.P.row(kept[i]);
      std::copy(row.begin(), row.end(), sub.row(i).begin());
    }
    result.accuracies = estimate_accuracies(sub);
    result.weights.resize(mk);
    double total = 0;
    for (std::size_t i = 0; i < mk; ++i) {
      result.weights[i] = std::max(result.accuracies[i], 0.0);
      total += result.weights[i];
    }
    if (total > 0) {
      for (double& w : result.weights) w /= total;
    } else {
      std::fill(result.weights.begin(), result.weights.end(), 1.0 / static_cast<double>(mk));
    }
  }

  // Raw (uncentered) predictions averaged; weights sum to 1, so offsets pass
  // through and the result stays inside the per-utterance prediction span.
  result.fused.assign(preds.P.cols, 0.0);
  for (std::size_t i = 0; i < mk; ++i) {
    const auto row = preds.P.row(kept[i]);
    for (std::size_t c = 0; c < preds.P.cols; ++c) {
      result.fused[c] += result.weights[i] * row[c];
    }
  }
  return result;
}

}  // namespace aer
