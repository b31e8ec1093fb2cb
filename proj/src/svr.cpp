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

#include "aer/svr.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "aer/csv.hpp"

namespace aer {

namespace {

constexpr double kTolerance = 1e-3;
constexpr double kTau = 1e-12;  // curvature floor for degenerate pairs

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double sq_dist(std::span<const double> a, std::span<const double> b) {
  double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

// The dual runs over 2n box variables theta_t >= 0: t < n are the positive
// coefficients (sign +1), t >= n the negative ones (sign -1), with
// beta_i = theta_i - theta_{i+n} and the balance constraint
// sum_t sign_t * theta_t = 0.
struct Duals {
  std::size_t n = 0;
  std::vector<double> theta;  // 2n
  std::vector<double> grad;   // 2n

  double sign(std::size_t t) const { return t < n ? 1.0 : -1.0; }
  std::size_t point(std::size_t t) const { return t < n ? t : t - n; }
};

}  // namespace

double kernel_eval(const SvrHyper& h, std::span<const double> a, std::span<const double> b) {
  switch (h.kernel) {
    case Kernel::linear: return dot(a, b);
    case Kernel::rbf: return std::exp(-h.gamma * sq_dist(a, b));
  }
  throw ContractError("unknown kernel");
}

SvrModel train_svr(const Matrix& X, std::span<const double> y, const SvrHyper& hyper,
                   SmoTrace* trace) {
  const std::size_t n = X.rows;
  if (n == 0 || y.size() != n) throw ContractError("svr needs matching, non-empty X and y");
  if (!(hyper.C > 0) || hyper.epsilon < 0 || (hyper.kernel == Kernel::rbf && !(hyper.gamma > 0))) {
    throw ContractError("invalid svr hyperparameters");
  }
  for (double v : X.data) {
    if (!std::isfinite(v)) throw ContractError("non-finite feature value");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw ContractError("non-finite label");
  }

  Matrix K(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double k = kernel_eval(hyper, X.row(i), X.row(j));
      K.at(i, j) = k;
      K.at(j, i) = k;
    }
  }

  Duals d;
  d.n = n;
  d.theta.assign(2 * n, 0.0);
  d.grad.resize(2 * n);
  for (std::size_t t = 0; t < 2 * n; ++t) {
    d.grad[t] = hyper.epsilon - d.sign(t) * y[d.point(t)];
  }

  const double C = hyper.C;
  double objective = 0;  // dual value (maximization form); starts at 0
  if (trace) trace->dual_objective.push_back(objective);

  const std::size_t max_updates = 10000 * n;
  double violation = std::numeric_limits<double>::infinity();
  bool converged = false;

  for (std::size_t iter = 0; iter < max_updates; ++iter) {
    // Maximal violating pair over the balance constraint's feasibility sets.
    double up_best = -std::numeric_limits<double>::infinity();
    double low_best = std::numeric_limits<double>::infinity();
    std::size_t up_t = 2 * n, low_t = 2 * n;
    for (std::size_t t = 0; t < 2 * n; ++t) {
      const double score = -d.sign(t) * d.grad[t];
      const bool positive_dir = d.sign(t) > 0;
      const bool can_grow = positive_dir ? d.theta[t] < C : d.theta[t] > 0;
      const bool can_shrink = positive_dir ? d.theta[t] > 0 : d.theta[t] < C;
      if (can_grow && score > up_best) {
        up_best = score;
        up_t = t;
      }
      if (can_shrink && score < low_best) {
        low_best = score;
        low_t = t;
      }
    }
    if (up_t == 2 * n || low_t == 2 * n) {
      violation = 0;
      converged = true;
      break;
    }
    violation = up_best - low_best;
    if (violation < kTolerance) {
      converged = true;
      break;
    }

    const std::size_t i = up_t, j = low_t;
    const std::size_t pi = d.point(i), pj = d.point(j);
    const double eta = K.at(pi, pi) + K.at(pj, pj) - 2.0 * K.at(pi, pj);

    // Step along u: theta_i moves by sign_i*step, theta_j by -sign_j*step.
    const double grad_dir = d.sign(i) * d.grad[i] - d.sign(j) * d.grad[j];  // < 0 here
    double step = -grad_dir / std::max(eta, kTau);
    const double room_i = d.sign(i) > 0 ? C - d.theta[i] : d.theta[i];
    const double room_j = d.sign(j) > 0 ? d.theta[j] : C - d.theta[j];
    step = std::min({step, room_i, room_j});

    d.theta[i] += d.sign(i) * step;
    d.theta[j] -= d.sign(j) * step;
    objective += -grad_dir * step - 0.5 * eta * step * step;
    for (std::size_t t = 0; t < 2 * n; ++t) {
      d.grad[t] += d.sign(t) * step * (K.at(d.point(t), pi) - K.at(d.point(t), pj));
    }
    if (trace) trace->dual_objective.push_back(objective);
  }

  // Bias from the optimality conditions: every interior variable pins
  // b = -sign_t * grad_t; otherwise the feasible interval's midpoint.
  double b = 0;
  std::size_t interior = 0;
  for (std::size_t t = 0; t < 2 * n; ++t) {
    if (d.theta[t] > 0 && d.theta[t] < C) {
      b += -d.sign(t) * d.grad[t];
      ++interior;
    }
  }
  if (interior > 0) {
    b /= static_cast<double>(interior);
  } else {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < 2 * n; ++t) {
      const double score = -d.sign(t) * d.grad[t];
      const bool positive_dir = d.sign(t) > 0;
      if (positive_dir ? d.theta[t] < C : d.theta[t] > 0) lo = std::max(lo, score);
      if (positive_dir ? d.theta[t] > 0 : d.theta[t] < C) hi = std::min(hi, score);
    }
    if (std::isfinite(lo) && std::isfinite(hi)) {
      b = 0.5 * (lo + hi);
    } else if (std::isfinite(lo)) {
      b = lo;
    } else if (std::isfinite(hi)) {
      b = hi;
    }
  }

  SvrModel model;
  model.hyper = hyper;
  model.bias = b;
  model.kkt_violation = std::max(violation, 0.0);
  model.converged = converged;
  std::vector<double> beta_full(n);
  for (std::size_t i = 0; i < n; ++i) {
    beta_full[i] = d.theta[i] - d.theta[i + n];
    if (beta_full[i] != 0.0) {
      model.beta.push_back(beta_full[i]);
      model.support.emplace_back(X.row(i).begin(), X.row(i).end());
    }
  }
  if (trace) trace->beta_full = std::move(beta_full);
  return model;
}

std::vector<double> svr_predict(const SvrModel& model, const Matrix& X) {
  for (const auto& sv : model.support) {
    if (sv.size() != X.cols) throw ContractError("feature count does not match model");
  }
  std::vector<double> out(X.rows, model.bias);
  for (std::size_t r = 0; r < X.rows; ++r) {
    for (std::size_t s = 0; s < model.support.size(); ++s) {
      out[r] += model.beta[s] * kernel_eval(model.hyper, model.support[s], X.row(r));
    }
  }
  return out;
}

double kkt_violation(const Matrix& X, std::span<const double> y,
                     std::span<const double> beta_full, const SvrHyper& hyper) {
  const std::size_t n = X.rows;
  if (beta_full.size() != n || y.size() != n) throw ContractError("kkt audit size mismatch");

  // Rebuild the box coordinates and their gradient from scratch.
  std::vector<double> fwob(n, 0.0);  // sum_j beta_j K(x_j, x_i)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (beta_full[j] != 0.0) {
        fwob[i] += beta_full[j] * kernel_eval(hyper, X.row(j), X.row(i));
      }
    }
  }
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double alpha_p = std::max(beta_full[i], 0.0);
    const double alpha_m = std::max(-beta_full[i], 0.0);
    const double grad_p = fwob[i] + hyper.epsilon - y[i];
    const double grad_m = -fwob[i] + hyper.epsilon + y[i];
    if (alpha_p < hyper.C) lo = std::max(lo, -grad_p);
    if (alpha_p > 0) hi = std::min(hi, -grad_p);
    if (alpha_m > 0) lo = std::max(lo, grad_m);
    if (alpha_m < hyper.C) hi = std::min(hi, grad_m);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) return 0.0;
  return std::max(lo - hi, 0.0);
}

double dual_objective(const Matrix& X, std::span<const double> y,
                      std::span<const double> beta_full, const SvrHyper& hyper) {
  const std::size_t n = X.rows;
  if (beta_full.size() != n || y.size() != n) throw ContractError("objective size mismatch");
  double quad = 0, lin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      quad += beta_full[i] * beta_full[j] * kernel_eval(hyper, X.row(i), X.row(j));
    }
    lin += y[i] * beta_full[i] - hyper.epsilon * std::abs(beta_full[i]);
  }
  return -0.5 * quad + lin;
}

void save_model(const std::filesystem::path& path, const SvrModel& model) {
  std::ostringstream out;
  out << "svr-model 1\n";
  out << "kernel " << (model.hyper.kernel == Kernel::rbf ? "rbf" : "linear") << '\n';
  out << "C " << format_double(model.hyper.C) << '\n';
  out << "epsilon " << format_double(model.hyper.epsilon) << '\n';
  out << "gamma " << format_double(model.hyper.gamma) << '\n';
  out << "bias " << format_double(model.bias) << '\n';
  out << "kkt_violation " << format_double(model.kkt_violation) << '\n';
  out << "converged " << (model.converged ? 1 : 0) << '\n';
  out << "features " << model.feature_indices.size();
  for (std::size_t f : model.feature_indices) out << ' ' << f;
  out << '\n';
  const std::size_t dim = model.support.empty() ? 0 : model.support[0].size();
  out << "support " << model.support.size() << ' ' << dim << '\n';
  for (std::size_t s = 0; s < model.support.size(); ++s) {
    out << format_double(model.beta[s]);
    for (double v : model.support[s]) out << ' ' << format_double(v);
    out << '\n';
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ContractError("cannot write model: " + path.string());
  file << out.str();
  if (!file) throw ContractError("write failed: " + path.string());
}

SvrModel load_model(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ContractError("cannot open model: " + path.string());

  auto fail = [&]() -> ContractError { return ContractError("malformed model: " + path.string()); };
  std::string word;
  int version = 0;
  if (!(file >> word >> version) || word != "svr-model" || version != 1) throw fail();

  SvrModel model;
  std::string kernel;
  if (!(file >> word >> kernel) || word != "kernel") throw fail();
  if (kernel == "rbf") {
    model.hyper.kernel = Kernel::rbf;
  } else if (kernel == "linear") {
    model.hyper.kernel = Kernel::linear;
  } else {
    throw fail();
  }
  auto read_scalar = [&](const char* name, double& value) {
    if (!(file >> word >> value) || word != name) throw fail();
  };
  read_scalar("C", model.hyper.C);
  read_scalar("epsilon", model.hyper.epsilon);
  read_scalar("gamma", model.hyper.gamma);
  read_scalar("bias", model.bias);
  read_scalar("kkt_violation", model.kkt_violation);
  int converged = 0;
  if (!(file >> word >> converged) || word != "converged") throw fail();
  model.converged = converged != 0;

  std::size_t n_features = 0;
  if (!(file >> word >> n_features) || word != "features") throw fail();
  model.feature_indices.resize(n_features);
  for (auto& f : model.feature_indices) {
    if (!(file >> f)) throw fail();
  }
  std::size_t n_support = 0, dim = 0;
  if (!(file >> word >> n_support >> dim) || word != "support") throw fail();
  model.beta.resize(n_support);
  model.support.assign(n_support, std::vector<double>(dim));
  for (std::size_t s = 0; s < n_support; ++s) {
    if (!(file >> model.beta[s])) throw fail();
    for (auto& v : model.support[s]) {
      if (!(file >> v)) throw fail();
    }
  }
  return model;
}

}  // namespace aer
