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
#include "aer/features.hpp"
#include "aer/relieff.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

aer::Matrix random_matrix(std::size_t n, std::size_t f, std::uint64_t seed) {
  aer::Matrix X(n, f);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (auto& v : X.data) v = uni(rng);
  return X;
}

}  // namespace

TEST_CASE("relief weights match the literal pseudocode over all instances") {
  const aer::Matrix X = random_matrix(60, 5, 13);
  std::vector<double> y(60);
  for (std::size_t i = 0; i < 60; ++i) y[i] = X.at(i, 1) + 0.2 * X.at(i, 3);

  aer::RReliefFParams p;
  p.k = 10;
  p.sigma = 20.0;
  const auto got = aer::rrelieff(X, y, p);
  const auto want = oracle::rrelieff_literal(X, y, p.k, p.sigma);
  REQUIRE(got.weights.size() == want.size());
  for (std::size_t f = 0; f < want.size(); ++f) {
    CHECK(std::abs(got.weights[f] - want[f]) < 1e-12);
  }
}

TEST_CASE("a feature that copies the label ranks first") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  aer::Matrix X(200, 6);
  std::vector<double> y(200);
  for (std::size_t i = 0; i < 200; ++i) {
    y[i] = uni(rng);
    X.at(i, 0) = uni(rng);
    X.at(i, 1) = uni(rng);
    X.at(i, 2) = y[i];  // planted copy
    X.at(i, 3) = uni(rng);
    X.at(i, 4) = uni(rng);
    X.at(i, 5) = uni(rng);
  }
  const auto ranking = aer::rrelieff(X, y, {});
  CHECK(ranking.order[0] == 2);
  CHECK(ranking.weights[2] > 0.0);
}

TEST_CASE("a constant label yields all-zero weights") {
  const aer::Matrix X = random_matrix(40, 4, 7);
  std::vector<double> y(40, 0.55);
  const auto ranking = aer::rrelieff(X, y, {});
  for (double w : ranking.weights) CHECK(w == 0.0);
  // order still lists every feature exactly once, by index on ties
  std::vector<std::size_t> expect = {0, 1, 2, 3};
  CHECK(ranking.order == expect);
}

TEST_CASE("weights stay within [-1, 1] and order sorts by descending weight") {
  const aer::Matrix X = random_matrix(80, 8, 99);
  std::vector<double> y(80);
  for (std::size_t i = 0; i < 80; ++i) y[i] = X.at(i, 7);
  const auto ranking = aer::rrelieff(X, y, {});
  for (double w : ranking.weights) {
    CHECK(w >= -1.0);
    CHECK(w <= 1.0);
  }
  for (std::size_t i = 1; i < ranking.order.size(); ++i) {
    CHECK(ranking.weights[ranking.order[i - 1]] >= ranking.weights[ranking.order[i]]);
  }
}

TEST_CASE("sampling fewer instances than rows is deterministic per seed") {
  const aer::Matrix X = random_matrix(50, 4, 3);
  std::vector<double> y(50);
  for (std::size_t i = 0; i < 50; ++i) y[i] = X.at(i, 0);
  aer::RReliefFParams p;
  p.m = 20;
  p.seed = 5;
  const auto a = aer::rrelieff(X, y, p);
  const auto b = aer::rrelieff(X, y, p);
  CHECK(a.weights == b.weights);
  p.seed = 6;
  const auto c = aer::rrelieff(X, y, p);
  CHECK(a.weights != c.weights);  // different sample, different accumulation
}

TEST_CASE("relief input contracts") {
  const aer::Matrix X = random_matrix(5, 3, 1);
  std::vector<double> y(5, 0.1);
  aer::RReliefFParams p;
  p.k = 10;  // needs n >= k + 1
  CHECK_THROWS_AS(aer::rrelieff(X, y, p), aer::ContractError);
  std::vector<double> wrong(4, 0.1);
  CHECK_THROWS_AS(aer::rrelieff(X, wrong, {}), aer::ContractError);
}

TEST_CASE("top_k returns leading ranks and validates its bound") {
  const aer::Matrix X = random_matrix(30, 4, 21);
  std::vector<double> y(30);
  for (std::size_t i = 0; i < 30; ++i) y[i] = X.at(i, 2);
  const auto ranking = aer::rrelieff(X, y, {});
  const auto t = aer::top_k(ranking, 2);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == ranking.order[0]);
  CHECK(t[1] == ranking.order[1]);
  CHECK_THROWS_AS(aer::top_k(ranking, 0), aer::ContractError);
  CHECK_THROWS_AS(aer::top_k(ranking, 5), aer::ContractError);
}

TEST_CASE("ranking round-trips through its CSV file") {
  const aer::Matrix X = random_matrix(40, aer::kFeatureCount, 55);
  std::vector<double> y(40);
  for (std::size_t i = 0; i < 40; ++i) y[i] = X.at(i, 10);
  const auto ranking = aer::rrelieff(X, y, {});

  const fs::path p = fs::temp_directory_path() / "aer_test_ranking.csv";
  aer::save_ranking(p, ranking, aer::feature_names());
  const auto back = aer::load_ranking(p);
  CHECK(back.order == ranking.order);
  REQUIRE(back.weights.size() == ranking.weights.size());
  for (std::size_t i = 0; i < ranking.weights.size(); ++i) {
    CHECK(back.weights[i] == ranking.weights[i]);
  }
  fs::remove(p);
}
