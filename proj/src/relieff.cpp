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

#include "aer/relieff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "aer/csv.hpp"

namespace aer {

namespace {

struct InstanceContribution {
  double label_mass = 0;                 // sum of label-diff influence
  std::vector<double> attr_mass;        // per feature
  std::vector<double> joint_mass;       // per feature
};

std::vector<double> column_ranges(const Matrix& X) {
  std::vector<double> ranges(X.cols, 0.0);
  for (std::size_t c = 0; c < X.cols; ++c) {
    double mn = X.at(0, c), mx = X.at(0, c);
    for (std::size_t r = 1; r < X.rows; ++r) {
      mn = std::min(mn, X.at(r, c));
      mx = std::max(mx, X.at(r, c));
    }
    ranges[c] = mx - mn;
  }
  return ranges;
}

// Contribution of one sampled instance: its k nearest neighbors vote with
// rank-weighted influence normalized to sum 1.
InstanceContribution instance_contribution(const Matrix& X, std::span<const double> y,
                                           const std::vector<double>& ranges, double y_range,
                                           std::size_t i, std::size_t k, double sigma) {
  const std::size_t n = X.rows;
  const std::size_t F = X.cols;

  std::vector<std::pair<double, std::size_t>> dist;
  dist.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    double d = 0;
    for (std::size_t f = 0; f < F; ++f) {
      if (ranges[f] > 0) d += std::abs(X.at(i, f) - X.at(j, f)) / ranges[f];
    }
    dist.emplace_back(d, j);
  }
  // Ties resolved by ascending index so the neighbor set is deterministic.
  std::sort(dist.begin(), dist.end());
  const std::size_t kk = std::min(k, dist.size());

  std::vector<double> influence(kk);
  double influence_sum = 0;
  for (std::size_t r = 0; r < kk; ++r) {
    const double rank = static_cast<double>(r + 1) / sigma;
    influence[r] = std::exp(-rank * rank);
    influence_sum += influence[r];
  }

  InstanceContribution out;
  out.attr_mass.assign(F, 0.0);
  out.joint_mass.assign(F, 0.0);
  for (std::size_t r = 0; r < kk; ++r) {
    const std::size_t j = dist[r].second;
    const double d = influence[r] / influence_sum;
    const double dy = y_range > 0 ? std::abs(y[i] - y[j]) / y_range : 0.0;
    out.label_mass += dy * d;
    for (std::size_t f = 0; f < F; ++f) {
      const double da = ranges[f] > 0 ? std::abs(X.at(i, f) - X.at(j, f)) / ranges[f] : 0.0;
      out.attr_mass[f] += da * d;
      out.joint_mass[f] += dy * da * d;
    }
  }
  return out;
}

FeatureRanking finalize(std::vector<double> weights) {
  FeatureRanking ranking;
  ranking.order.resize(weights.size());
  std::iota(ranking.order.begin(), ranking.order.end(), std::size_t{0});
  std::stable_sort(ranking.order.begin(), ranking.order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  ranking.weights = std::move(weights);
  return ranking;
}

FeatureRanking rrelieff_impl(const Matrix& X, std::span<const double> y, const RReliefFParams& p,
                             bool parallel) {
  const std::size_t n = X.rows;
  const std::size_t F = X.cols;
  if (y.size() != n) throw ContractError("feature/label row count mismatch");
  if (p.k == 0 || p.sigma <= 0) throw ContractError("invalid relief parameters");
  if (n <= p.k) throw ContractError("relief needs more instances than neighbors");

  double y_min = y[0], y_max = y[0];
  for (double v : y) {
    y_min = std::min(y_min, v);
    y_max = std::max(y_max, v);
  }
  const double y_range = y_max - y_min;
  if (y_range <= 0.0) return finalize(std::vector<double>(F, 0.0));  // constant label

  const auto ranges = column_ranges(X);

  std::vector<std::size_t> sampled(n);
  std::iota(sampled.begin(), sampled.end(), std::size_t{0});
  if (p.m > 0 && p.m < n) {
    std::vector<std::size_t> chosen;
    chosen.reserve(p.m);
    std::mt19937 rng(static_cast<std::uint32_t>(p.seed));
    std::sample(sampled.begin(), sampled.end(), std::back_inserter(chosen), p.m, rng);
    sampled = std::move(chosen);
  }
  const std::size_t m_used = sampled.size();

  // Per-instance contributions land in their own slots, then reduce in
  // instance order: the parallel result is bitwise equal to the serial one.
  std::vector<InstanceContribution> contributions(m_used);
  const auto m_count = static_cast<std::ptrdiff_t>(m_used);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::ptrdiff_t s = 0; s < m_count; ++s) {
    contributions[static_cast<std::size_t>(s)] = instance_contribution(
        X, y, ranges, y_range, sampled[static_cast<std::size_t>(s)], p.k, p.sigma);
  }

  double n_label = 0;
  std::vector<double> n_attr(F, 0.0), n_joint(F, 0.0);
  for (const auto& c : contributions) {
    n_label += c.label_mass;
    for (std::size_t f = 0; f < F; ++f) {
      n_attr[f] += c.attr_mass[f];
      n_joint[f] += c.joint_mass[f];
    }
  }

  std::vector<double> weights(F, 0.0);
  const double m_minus = static_cast<double>(m_used) - n_label;
  for (std::size_t f = 0; f < F; ++f) {
    const double hit = n_label > 0 ? n_joint[f] / n_label : 0.0;
    const double miss = m_minus > 0 ? (n_attr[f] - n_joint[f]) / m_minus : 0.0;
    weights[f] = hit - miss;
  }
  return finalize(std::move(weights));
}

}  // namespace

FeatureRanking rrelieff(const Matrix& X, std::span<const double> y, const RReliefFParams& p) {
  return rrelieff_impl(X, y, p, true);
}

FeatureRanking rrelieff_serial(const Matrix& X, std::span<const double> y,
                               const RReliefFParams& p) {
  return rrelieff_impl(X, y, p, false);
}

std::vector<std::size_t> top_k(const FeatureRanking& ranking, std::size_t k) {
  if (k == 0 || k > ranking.order.size()) throw ContractError("top_k out of range");
  return {ranking.order.begin(), ranking.order.begin() + static_cast<std::ptrdiff_t>(k)};
}

void save_ranking(const std::filesystem::path& path, const FeatureRanking& ranking,
                  const std::vector<std::string>& names) {
  if (names.size() != ranking.weights.size()) {
    throw ContractError("ranking/name size mismatch");
  }
  std::vector<std::string> lines = {"rank,feature_index,feature_name,weight"};
  for (std::size_t r = 0; r < ranking.order.size(); ++r) {
    const std::size_t f = ranking.order[r];
    lines.push_back(std::to_string(r + 1) + ',' + std::to_string(f) + ',' + names[f] + ',' +
                    format_double(ranking.weights[f]));
  }
  write_lines(path, lines);
}

FeatureRanking load_ranking(const std::filesystem::path& path) {
  CsvFile csv = read_csv(path);
  const std::vector<std::string> expected = {"rank", "feature_index", "feature_name", "weight"};
  if (csv.header != expected) throw ContractError("bad ranking header: " + path.string());

  FeatureRanking ranking;
  ranking.weights.assign(csv.rows.size(), 0.0);
  for (const auto& row : csv.rows) {
    auto f = static_cast<std::size_t>(parse_double(row[1], "ranking"));
    if (f >= csv.rows.size()) throw ContractError("feature index out of range: " + path.string());
    ranking.order.push_back(f);
    ranking.weights[f] = parse_double(row[3], "ranking");
  }
  return ranking;
}

}  // namespace aer
