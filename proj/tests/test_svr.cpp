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
#include <filesystem>
#include <random>
#include <vector>

#include "aer/common.hpp"
#include "aer/svr.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

aer::Matrix random_points(std::size_t n, std::size_t d, std::uint64_t seed) {
  aer::Matrix X(n, d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (auto& v : X.data) v = uni(rng);
  return X;
}

}  // namespace

TEST_CASE("kernels evaluate to their closed forms") {
  aer::SvrHyper lin;
  lin.kernel = aer::Kernel::linear;
  std::vector<double> a = {1.0, 2.0};
  std::vector<double> b = {3.0, -1.0};
  CHECK(aer::kernel_eval(lin, a, b) == doctest::Approx(1.0).epsilon(1e-12));

  aer::SvrHyper rbf;
  rbf.kernel = aer::Kernel::rbf;
  rbf.gamma = 0.5;
  // ||a-b||^2 = 4 + 9 = 13
  CHECK(aer::kernel_eval(rbf, a, b) == doctest::Approx(std::exp(-6.5)).epsilon(1e-12));
  CHECK(aer::kernel_eval(rbf, a, a) == 1.0);
}

TEST_CASE("constant targets produce a bias-only model") {
  const aer::Matrix X = random_points(6, 2, 40);
  std::vector<double> y(6, 0.7);
  aer::SvrHyper h;
  h.epsilon = 0.1;
  const auto model = aer::train_svr(X, y, h);
  CHECK(model.support.empty());
  CHECK(model.bias == doctest::Approx(0.7).epsilon(1e-12));
  const auto pred = aer::svr_predict(model, X);
  for (double p : pred) CHECK(p == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(model.converged);
}

TEST_CASE("a single training point is fit exactly") {
  aer::Matrix X(1, 3);
  X.at(0, 0) = 0.2;
  X.at(0, 1) = -0.4;
  X.at(0, 2) = 0.9;
  std::vector<double> y = {0.33};
  const auto model = aer::train_svr(X, y, {});
  const auto pred = aer::svr_predict(model, X);
  CHECK(pred[0] == doctest::Approx(0.33).epsilon(1e-12));
}

TEST_CASE("the dual objective is monotone along the solver trace") {
  const aer::Matrix X = random_points(12, 3, 41);
  std::vector<double> y(12);
  for (std::size_t i = 0; i < 12; ++i) y[i] = X.at(i, 0) - 0.5 * X.at(i, 2);
  aer::SvrHyper h;
  h.C = 10.0;
  h.epsilon = 0.01;
  aer::SmoTrace trace;
  const auto model = aer::train_svr(X, y, h, &trace);
  REQUIRE(!trace.dual_objective.empty());
  for (std::size_t i = 1; i < trace.dual_objective.size(); ++i) {
    CHECK(trace.dual_objective[i] >= trace.dual_objective[i - 1] - 1e-12);
  }
  // the trace's last value is the true dual objective of the final coefficients
  const double recomputed = aer::dual_objective(X, y, trace.beta_full, h);
  CHECK(trace.dual_objective.back() == doctest::Approx(recomputed).epsilon(1e-9));
  CHECK(model.converged);
}

TEST_CASE("smo reaches the dual optimum found by projected gradient ascent") {
  for (std::uint64_t seed : {50u, 51u, 52u}) {
    const std::size_t n = 6;
    const aer::Matrix X = random_points(n, 2, seed);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = 0.8 * X.at(i, 0) + 0.3 * X.at(i, 1);

    for (auto kernel : {aer::Kernel::linear, aer::Kernel::rbf}) {
      aer::SvrHyper h;
      h.kernel = kernel;
      h.C = 5.0;
      h.epsilon = 0.05;
      h.gamma = 0.5;
      aer::SmoTrace trace;
      aer::train_svr(X, y, h, &trace);
      const double smo_obj = aer::dual_objective(X, y, trace.beta_full, h);
      const double pg_obj = oracle::svr_dual_oracle(X, y, h, 20000);
      CHECK(smo_obj >= pg_obj - 1e-4);
    }
  }
}

TEST_CASE("the independent optimality audit accepts converged models") {
  const aer::Matrix X = random_points(20, 4, 60);
  std::vector<double> y(20);
  for (std::size_t i = 0; i < 20; ++i) {
    y[i] = std::sin(2.0 * X.at(i, 0)) * 0.4 + 0.2 * X.at(i, 3);
  }
  for (double C : {0.5, 10.0}) {
    aer::SvrHyper h;
    h.C = C;
    h.epsilon = 0.02;
    h.gamma = 1.0;
    aer::SmoTrace trace;
    const auto model = aer::train_svr(X, y, h, &trace);
    CHECK(model.converged);
    CHECK(aer::kkt_violation(X, y, trace.beta_full, h) < 1e-3);
    CHECK(model.kkt_violation < 1e-3);
  }
}

TEST_CASE("coefficients respect the box and balance constraints") {
  const aer::Matrix X = random_points(15, 3, 70);
  std::vector<double> y(15);
  for (std::size_t i = 0; i < 15; ++i) y[i] = X.at(i, 1);
  aer::SvrHyper h;
  h.C = 2.0;
  h.epsilon = 0.01;
  aer::SmoTrace trace;
  const auto model = aer::train_svr(X, y, h, &trace);
  double sum = 0;
  for (double b : trace.beta_full) {
    CHECK(std::abs(b) <= h.C + 1e-12);
    sum += b;
  }
  CHECK(std::abs(sum) < 1e-9);
  // support vectors are exactly the nonzero-coefficient rows
  std::size_t nonzero = 0;
  for (double b : trace.beta_full) {
    if (b != 0.0) ++nonzero;
  }
  CHECK(model.support.size() == nonzero);
  CHECK(model.beta.size() == nonzero);
}

TEST_CASE("wider epsilon tubes use fewer support vectors") {
  const aer::Matrix X = random_points(40, 2, 80);
  std::vector<double> y(40);
  std::mt19937_64 rng(81);
  std::normal_distribution<double> noise(0.0, 0.02);
  for (std::size_t i = 0; i < 40; ++i) y[i] = 0.5 * X.at(i, 0) + noise(rng);

  aer::SvrHyper narrow;
  narrow.epsilon = 0.001;
  aer::SvrHyper wide;
  wide.epsilon = 0.2;
  const auto m_narrow = aer::train_svr(X, y, narrow);
  const auto m_wide = aer::train_svr(X, y, wide);
  CHECK(m_wide.support.size() < m_narrow.support.size());
}

TEST_CASE("models round-trip through their file format with exact predictions") {
  const aer::Matrix X = random_points(10, 3, 90);
  std::vector<double> y(10);
  for (std::size_t i = 0; i < 10; ++i) y[i] = 0.3 * X.at(i, 0) - 0.6 * X.at(i, 2);
  aer::SvrHyper h;
  h.C = 3.0;
  h.epsilon = 0.01;
  h.gamma = 0.7;
  auto model = aer::train_svr(X, y, h);
  model.feature_indices = {4, 9, 17};

  const fs::path p = fs::temp_directory_path() / "aer_test_model.svr";
  aer::save_model(p, model);
  const auto back = aer::load_model(p);
  CHECK(back.hyper.C == model.hyper.C);
  CHECK(back.hyper.epsilon == model.hyper.epsilon);
  CHECK(back.hyper.gamma == model.hyper.gamma);
  CHECK(back.feature_indices == model.feature_indices);
  CHECK(back.bias == model.bias);
  CHECK(back.converged == model.converged);

  const aer::Matrix probe = random_points(5, 3, 91);
  const auto before = aer::svr_predict(model, probe);
  const auto after = aer::svr_predict(back, probe);
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(before[i] == after[i]);
  fs::remove(p);
}

TEST_CASE("training rejects inconsistent shapes and parameters") {
  const aer::Matrix X = random_points(5, 2, 95);
  std::vector<double> y(4, 0.0);
  CHECK_THROWS_AS(aer::train_svr(X, y, {}), aer::ContractError);
  std::vector<double> y5(5, 0.0);
  aer::SvrHyper bad;
  bad.C = 0.0;
  CHECK_THROWS_AS(aer::train_svr(X, y5, bad), aer::ContractError);
  bad.C = 1.0;
  bad.epsilon = -0.1;
  CHECK_THROWS_AS(aer::train_svr(X, y5, bad), aer::ContractError);
}
