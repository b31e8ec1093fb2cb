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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "aer/common.hpp"
#include "aer/fusion.hpp"
#include "doctest.h"

namespace {

// Predictions = signal scaled per model plus independent noise.
aer::PredictionSet planted_set(const std::vector<double>& scale,
                               const std::vector<double>& noise_sigma, std::size_t n,
                               std::uint64_t seed) {
  aer::PredictionSet set;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> signal(n);
  for (auto& s : signal) s = gauss(rng);

  set.P = aer::Matrix(scale.size(), n);
  for (std::size_t m = 0; m < scale.size(); ++m) {
    set.model_names.push_back("model" + std::to_string(m));
    for (std::size_t j = 0; j < n; ++j) {
      set.P.at(m, j) = scale[m] * signal[j] + noise_sigma[m] * gauss(rng);
    }
  }
  for (std::size_t j = 0; j < n; ++j) set.utterance_ids.push_back("u" + std::to_string(j));
  return set;
}

}  // namespace

TEST_CASE("row covariance uses the sample divisor") {
  aer::Matrix P(2, 3);
  // rows: (1, 2, 3) and (2, 4, 6)
  for (std::size_t j = 0; j < 3; ++j) {
    P.at(0, j) = static_cast<double>(j + 1);
    P.at(1, j) = 2.0 * static_cast<double>(j + 1);
  }
  const aer::Matrix Q = aer::row_covariance(P);
  CHECK(Q.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(Q.at(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(Q.at(1, 1) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(Q.at(1, 0) == Q.at(0, 1));
}

TEST_CASE("rank-1 completion recovers a planted factor from off-diagonals") {
  const std::vector<double> s = {0.9, 0.6, 0.3};
  aer::Matrix Q(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Q.at(i, j) = i == j ? 123.0 : s[i] * s[j];  // diagonal is ignored and rebuilt
    }
  }
  const auto done = aer::complete_rank1(Q);
  REQUIRE(done.factor.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(done.factor[i] - s[i]) < 1e-8);
  }
  // triplet identity: |s_1| = sqrt(Q12 * Q13 / Q23) on an exact rank-1 input
  const double triplet = std::sqrt(s[0] * s[1] * (s[0] * s[2]) / (s[1] * s[2]));
  CHECK(std::abs(done.factor[0] - triplet) < 1e-8);
}

TEST_CASE("rank-1 completion flips the sign so the factor sums positive") {
  const std::vector<double> s = {-0.8, -0.5, -0.4};
  aer::Matrix Q(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) Q.at(i, j) = s[i] * s[j];
  }
  const auto done = aer::complete_rank1(Q);
  double sum = 0;
  for (double f : done.factor) sum += f;
  CHECK(sum > 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(done.factor[i] + s[i]) < 1e-8);
}

TEST_CASE("identical prediction rows give equal factor entries and uniform weights") {
  const std::size_t n = 64;
  aer::PredictionSet set = planted_set({1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, n, 5);
  const aer::Matrix Q = aer::row_covariance(set.P);
  const auto done = aer::complete_rank1(Q);
  CHECK(std::abs(done.factor[0] - done.factor[1]) < 1e-10);
  CHECK(std::abs(done.factor[1] - done.factor[2]) < 1e-10);

  const auto fused = aer::smlr_fuse(set, {});
  for (double w : fused.weights) CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(fused.fused[j] == doctest::Approx(set.P.at(0, j)).epsilon(1e-12));
  }
}

TEST_CASE("accuracy scores order models by signal to noise") {
  // scales equal, noise increasing: model0 best, model3 worst
  const auto set = planted_set({1.0, 1.0, 1.0, 1.0}, {0.1, 0.2, 0.4, 0.8}, 5000, 11);
  const auto acc = aer::estimate_accuracies(set.P);
  REQUIRE(acc.size() == 4);
  CHECK(acc[0] > acc[1]);
  CHECK(acc[1] > acc[2]);
  CHECK(acc[2] > acc[3]);
  CHECK(acc[0] > 0.0);
}

TEST_CASE("estimate_accuracies enforces its input contracts") {
  aer::Matrix two(2, 10);
  for (std::size_t j = 0; j < 10; ++j) {
    two.at(0, j) = static_cast<double>(j);
    two.at(1, j) = static_cast<double>(j) * 0.5;
  }
  CHECK_THROWS_AS(aer::estimate_accuracies(two), aer::ContractError);

  aer::Matrix with_const(3, 10);
  for (std::size_t j = 0; j < 10; ++j) {
    with_const.at(0, j) = static_cast<double>(j);
    with_const.at(1, j) = 7.0;  // constant row: zero variance
    with_const.at(2, j) = static_cast<double>(j) * 0.5;
  }
  CHECK_THROWS_AS(aer::estimate_accuracies(with_const), aer::ContractError);
}

TEST_CASE("fusing weights better models higher and beats the worst model") {
  const auto set = planted_set({1.0, 1.0, 1.0}, {0.1, 0.3, 0.6}, 4000, 21);
  const auto fused = aer::smlr_fuse(set, {});
  REQUIRE(fused.weights.size() == 3);
  CHECK(fused.weights[0] > fused.weights[1]);
  CHECK(fused.weights[1] > fused.weights[2]);
  double wsum = 0;
  for (double w : fused.weights) {
    CHECK(w >= 0.0);
    wsum += w;
  }
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(fused.two_model_warning);
}

TEST_CASE("excluding a model removes it from the ensemble") {
  const auto set = planted_set({1.0, 1.0, 1.0, 1.0}, {0.1, 0.2, 0.3, 0.4}, 2000, 31);
  const auto fused = aer::smlr_fuse(set, {"model2"});
  CHECK(fused.model_names == std::vector<std::string>{"model0", "model1", "model3"});
  CHECK(fused.weights.size() == 3);
}

TEST_CASE("exclusion contracts: unknown names and empty ensembles") {
  const auto set = planted_set({1.0, 1.0, 1.0}, {0.1, 0.2, 0.3}, 100, 41);
  CHECK_THROWS_AS(aer::smlr_fuse(set, {"nope"}), aer::ContractError);
  CHECK_THROWS_AS(aer::smlr_fuse(set, {"model0", "model1", "model2"}), aer::ContractError);
}

TEST_CASE("two models fall back to a uniform average with a warning") {
  const auto set = planted_set({1.0, 1.0}, {0.1, 0.4}, 200, 51);
  const auto fused = aer::smlr_fuse(set, {});
  CHECK(fused.two_model_warning);
  CHECK(fused.weights == std::vector<double>{0.5, 0.5});
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(fused.fused[j] ==
          doctest::Approx(0.5 * (set.P.at(0, j) + set.P.at(1, j))).epsilon(1e-12));
  }
}

TEST_CASE("a single model passes through unchanged") {
  const auto set = planted_set({1.0, 1.0, 1.0}, {0.1, 0.2, 0.3}, 150, 61);
  const auto fused = aer::smlr_fuse(set, {"model1", "model2"});
  CHECK(fused.model_names == std::vector<std::string>{"model0"});
  CHECK(fused.weights == std::vector<double>{1.0});
  for (std::size_t j = 0; j < 150; ++j) CHECK(fused.fused[j] == set.P.at(0, j));
}

TEST_CASE("fused output is the weighted average of raw predictions") {
  const auto set = planted_set({1.0, 1.0, 1.0}, {0.05, 0.1, 0.2}, 500, 71);
  const auto fused = aer::smlr_fuse(set, {});
  for (std::size_t j = 0; j < 10; ++j) {
    double want = 0;
    for (std::size_t m = 0; m < 3; ++m) want += fused.weights[m] * set.P.at(m, j);
    CHECK(fused.fused[j] == doctest::Approx(want).epsilon(1e-12));
  }
}
