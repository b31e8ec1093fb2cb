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

// The OpenMP variants must be bit-for-bit equal to the serial references:
// every parallel loop writes to per-index slots and reductions run serially
// in index order.

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "aer/features.hpp"
#include "aer/relieff.hpp"
#include "doctest.h"

TEST_CASE("parallel feature extraction equals the serial reference bitwise") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<aer::Signal> signals(9);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < signals.size(); ++i) {
    ids.push_back("s" + std::to_string(i));
    signals[i].sample_rate = 16000.0;
    signals[i].samples.resize(8000 + 512 * i);
    const double f0 = 100.0 + 300.0 * uni(rng);
    for (std::size_t t = 0; t < signals[i].samples.size(); ++t) {
      signals[i].samples[t] =
          0.5 * std::sin(2.0 * std::numbers::pi * f0 * static_cast<double>(t) / 16000.0) +
          0.05 * (uni(rng) - 0.5);
    }
  }
  const aer::ExtractParams p;
  const aer::Table serial = aer::extract_table_serial(signals, ids, p);
  const aer::Table parallel = aer::extract_table(signals, ids, p);
  CHECK(serial.ids == parallel.ids);
  REQUIRE(serial.m.data.size() == parallel.m.data.size());
  for (std::size_t i = 0; i < serial.m.data.size(); ++i) {
    CHECK(serial.m.data[i] == parallel.m.data[i]);
  }
}

TEST_CASE("parallel relief ranking equals the serial reference bitwise") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (std::size_t n : {30u, 121u}) {
    aer::Matrix X(n, 12);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t f = 0; f < 12; ++f) X.at(i, f) = uni(rng);
      y[i] = X.at(i, 3) * 0.8 + 0.2 * uni(rng);
    }
    const auto serial = aer::rrelieff_serial(X, y, {});
    const auto parallel = aer::rrelieff(X, y, {});
    CHECK(serial.order == parallel.order);
    REQUIRE(serial.weights.size() == parallel.weights.size());
    for (std::size_t f = 0; f < serial.weights.size(); ++f) {
      CHECK(serial.weights[f] == parallel.weights[f]);
    }
  }
}
