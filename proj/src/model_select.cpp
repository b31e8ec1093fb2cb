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

#include "aer/model_select.hpp"

#include <algorithm>
#include <map>

#include "aer/csv.hpp"
#include "aer/metrics.hpp"

namespace aer {

namespace {

Matrix select_columns(const Matrix& X, std::span<const std::size_t> cols) {
  Matrix out(X.rows, cols.size());
  for (std::size_t r = 0; r < X.rows; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out.at(r, c) = X.at(r, cols[c]);
    }
  }
  return out;
}

struct Config {
  std::size_t k;
  SvrHyper hyper;
};

}  // namespace

SelectionResult model_select(const Matrix& train_x, std::span<const double> train_y,
                             const Matrix& val_x, std::span<const double> val_y,
                             const FeatureRanking& ranking, const SelectionGrids& grids) {
  if (train_x.rows == 0) throw ContractError("empty training split");
  if (val_x.rows == 0) throw ContractError("empty validation split");
  if (train_x.cols != val_x.cols) throw ContractError("train/validation column mismatch");
  if (grids.C.empty() || grids.epsilon.empty() || (grids.gamma.empty() && !grids.gamma_auto)) {
    throw ContractError("empty hyperparameter grid");
  }

  const std::size_t d = train_x.cols;
  std::vector<std::size_t> k_values;
  for (std::size_t k : grids.k) {
    if (k >= 1 && k <= d) k_values.push_back(k);
  }
  if (k_values.empty()) k_values.push_back(d);

  // Flatten the grid in tie-break order: k, then C, then epsilon, then gamma
  // (explicit values first, the 1/k automatic value last).
  std::vector<Config> configs;
  for (std::size_t k : k_values) {
    std::vector<double> gammas = grids.gamma;
    if (grids.gamma_auto) gammas.push_back(1.0 / static_cast<double>(k));
    for (double C : grids.C) {
      for (double eps : grids.epsilon) {
        for (double gamma : gammas) {
          SvrHyper h;
          h.kernel = Kernel::rbf;
          h.C = C;
          h.epsilon = eps;
          h.gamma = gamma;
          configs.push_back({k, h});
        }
      }
    }
  }

  // Restricted feature matrices are shared read-only across configurations.
  std::map<std::size_t, std::pair<Matrix, Matrix>> by_k;
  for (std::size_t k : k_values) {
    auto cols = top_k(ranking, k);
    by_k.emplace(k, std::make_pair(select_columns(train_x, cols), select_columns(val_x, cols)));
  }

  // Scores land in per-configuration slots; the argmax scan below runs in
  // grid order, so parallel evaluation cannot change the selection.
  std::vector<double> scores(configs.size());
  const auto n_configs = static_cast<std::ptrdiff_t>(configs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t c = 0; c < n_configs; ++c) {
    const auto& cfg = configs[static_cast<std::size_t>(c)];
    const auto& [tr, val] = by_k.at(cfg.k);
    SvrModel model = train_svr(tr, train_y, cfg.hyper);
    const auto preds = svr_predict(model, val);
    scores[static_cast<std::size_t>(c)] = ccc(val_y, preds);
  }

  std::size_t best = 0;
  for (std::size_t c = 1; c < configs.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }

  SelectionResult result;
  result.k = configs[best].k;
  result.hyper = configs[best].hyper;
  result.val_ccc = scores[best];
  result.log.reserve(configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c) {
    result.log.push_back({configs[c].k, configs[c].hyper, scores[c]});
  }

  const auto& [tr, val] = by_k.at(result.k);
  result.model = train_svr(tr, train_y, result.hyper);
  result.model.feature_indices = top_k(ranking, result.k);
  return result;
}

void save_selection_log(const std::filesystem::path& path,
                        const std::vector<SelectionEntry>& log) {
  std::vector<std::string> lines = {"k,C,epsilon,gamma,val_ccc"};
  for (const auto& e : log) {
    lines.push_back(std::to_string(e.k) + ',' + format_double(e.hyper.C) + ',' +
                    format_double(e.hyper.epsilon) + ',' + format_double(e.hyper.gamma) + ',' +
                    format_double(e.val_ccc));
  }
  write_lines(path, lines);
}

}  // namespace aer
