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
#include <string>
#include <vector>

#include "aer/common.hpp"

namespace aer {

// Base-model predictions for one target: P(i, j) = model i's prediction for
// utterance j. Rows are aligned to the same utterance order.
struct PredictionSet {
  std::vector<std::string> model_names;
  std::vector<std::string> utterance_ids;
  Matrix P;  // M x N
};

// Sample covariance (divisor N-1) of the rows of P.
Matrix row_covariance(const Matrix& P);

// Rank-1 completion of a symmetric matrix from its off-diagonal entries:
// the diagonal is seeded with each row's largest |off-diagonal| entry, then
// { leading eigenpair (lambda, v) by power iteration; diag <- lambda*v.*v }
// repeats until the diagonal moves less than 1e-13 (capped at 10000 sweeps;
// the acceptance-level 1e-8 factor recovery needs a few hundred). factor =
// sqrt(lambda)*v with sign chosen so the factor sums positive.
struct Rank1Completion {
  double lambda = 0;
  std::vector<double> v;
  std::vector<double> factor;
  std::vector<double> diag;
  std::size_t sweeps = 0;
};

// Throws when a power iteration exceeds 10000 steps without settling.
Rank1Completion complete_rank1(Matrix q);

// Per-model accuracy scores from unlabeled predictions: the rank-1 factor s
// of the row covariance estimates each model's shared-signal amplitude, and
// Q_ii - s_i^2 its private noise. The score sign(s_i) * s_i^2 / (Q_ii -
// s_i^2) ranks models by signal-to-noise; the noise term is floored at
// max(1e-15, 1e-9 * Q_ii) so noise-free rows score uniformly huge rather
// than dividing by zero. Requires M >= 3 and no constant row.
std::vector<double> estimate_accuracies(const Matrix& P);

struct FusionResult {
  std::vector<std::string> model_names;   // after exclusion
  std::vector<double> accuracies;         // scores behind the weights
  std::vector<double> weights;            // >= 0, sum 1
  std::vector<double> fused;              // per utterance, raw predictions averaged
  bool two_model_warning = false;         // M' == 2: uniform weights fallback
};

// Accuracy-weighted average of the non-excluded rows: with >= 3 models the
// weights are the clamped-to-zero accuracy scores normalized to sum 1 (all
// zero falls back to uniform); 2 models average uniformly with a warning;
// 1 model passes through. Unknown names in `exclude` and an exclusion that
// removes every model are contract errors.
FusionResult smlr_fuse(const PredictionSet& preds, const std::vector<std::string>& exclude);

}  // namespace aer
