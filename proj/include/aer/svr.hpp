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

#include <filesystem>
#include <span>
#include <vector>

#include "aer/common.hpp"

namespace aer {

enum class Kernel { linear, rbf };

struct SvrHyper {
  Kernel kernel = Kernel::rbf;
  double C = 1.0;
  double epsilon = 0.1;
  double gamma = 0.1;  // rbf only
};

struct SvrModel {
  SvrHyper hyper;
  std::vector<std::size_t> feature_indices;   // columns the model consumes
  std::vector<std::vector<double>> support;   // training rows with beta != 0
  std::vector<double> beta;                   // alpha_i - alpha_i*, |beta| <= C
  double bias = 0;
  double kkt_violation = 0;                   // achieved at termination
  bool converged = true;                      // violation < tolerance reached
};

double kernel_eval(const SvrHyper& h, std::span<const double> a, std::span<const double> b);

// Optional solver trace: dual objective after each pair update (for
// monotonicity checks) and the final coefficient of every training row,
// including zeros (for independent optimality audits).
struct SmoTrace {
  std::vector<double> dual_objective;
  std::vector<double> beta_full;
};

// Epsilon-insensitive SVR trained by sequential minimal optimization on the
// dual: maximize -1/2 sum_ij beta_i beta_j K_ij - eps sum|beta_i| + sum y_i
// beta_i with sum beta = 0, |beta_i| <= C. Selects the maximal violating
// pair each step; stops when the violation drops below 1e-3 or after
// 10000*n pair updates (the model is returned either way, with the achieved
// violation recorded).
SvrModel train_svr(const Matrix& X, std::span<const double> y, const SvrHyper& hyper,
                   SmoTrace* trace = nullptr);

// f(x) = sum beta_i K(x_i, x) + b. X must have the model's column count.
std::vector<double> svr_predict(const SvrModel& model, const Matrix& X);

// Maximal violation of the dual optimality conditions for a full coefficient
// vector on training data; recomputed from scratch, independent of the
// solver's internal gradient.
double kkt_violation(const Matrix& X, std::span<const double> y,
                     std::span<const double> beta_full, const SvrHyper& hyper);

// Dual objective value of a full coefficient vector.
double dual_objective(const Matrix& X, std::span<const double> y,
                      std::span<const double> beta_full, const SvrHyper& hyper);

void save_model(const std::filesystem::path& path, const SvrModel& model);
SvrModel load_model(const std::filesystem::path& path);

}  // namespace aer
