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

#include <span>

namespace aer {

// Concordance correlation: 2*cov(y, yhat) / (var(y) + var(yhat) + (mean
// difference)^2), population moments. Exactly equal series give 1.0; a zero
// denominator otherwise gives 0.0. Requires equal lengths, n >= 2.
double ccc(std::span<const double> y, std::span<const double> y_hat);

// Mean squared error.
double mse(std::span<const double> y, std::span<const double> y_hat);

struct PearsonResult {
  double value = 0;
  bool degenerate = false;  // set when either series has zero variance
};

PearsonResult pearson(std::span<const double> y, std::span<const double> y_hat);

}  // namespace aer
