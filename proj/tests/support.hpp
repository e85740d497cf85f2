// Copyright 2026 The creadet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Shared generators for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "creadet/event_stream.hpp"
#include "creadet/grid.hpp"
#include "creadet/ingest.hpp"
#include "creadet/markov.hpp"

namespace creadet::testing {

inline Eigen::VectorXd random_counts(std::mt19937_64& rng, int bins, int max_count) {
  std::uniform_int_distribution<int> count(0, max_count);
  Eigen::VectorXd v(bins);
  for (int i = 0; i < bins; ++i) v(i) = count(rng);
  return v;
}

/// Two-column table with bins in [2, 20] and counts in [0, 100], each column non-empty.
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> random_table(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bins(2, 20);
  const int n = bins(rng);
  Eigen::VectorXd r, s;
  do {
    r = random_counts(rng, n, 100);
    s = random_counts(rng, n, 100);
  } while (r.sum() == 0 || s.sum() == 0);
  return {r, s};
}

inline Eigen::VectorXd random_distribution(std::mt19937_64& rng, int n) {
  std::gamma_distribution<double> g(1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v / v.sum();
}

/// Dense random chain: pi and every row drawn from a flat Dirichlet.
inline markov::MarkovModel random_chain(std::mt19937_64& rng, int n) {
  Eigen::VectorXd pi = random_distribution(rng, n);
  Eigen::MatrixXd theta(n, n);
  for (int i = 0; i < n; ++i) theta.row(i) = random_distribution(rng, n).transpose();
  return markov::MarkovModel(pi, theta);
}

/// Two single-session halves, the first sampled from `a`, the second from `b`.
inline EventStream two_model_stream(const markov::MarkovModel& a, const markov::MarkovModel& b,
                                    std::size_t half, markov::Rng& rng) {
  const std::size_t len[] = {half};
  EventStream s = markov::sample(a, len, rng);
  s.append(markov::sample(b, len, rng));
  return s;
}

/// Touch samples that quantize back to `states`: contacts at cell centres,
/// lifts as down=0 samples, one sample per state at unit time steps.
inline std::vector<ingest::TouchEvent> touches_for(std::span<const State> states, const GridSpec& grid = {}) {
  std::vector<ingest::TouchEvent> out;
  double t = 0.0;
  for (State s : states) {
    ingest::TouchEvent e;
    e.time = t;
    t += 1.0;
    if (grid.is_offscreen(s)) {
      e.down = false;
    } else {
      const int row = s / grid.cols;
      const int col = s % grid.cols;
      e.x = (col + 0.5) / grid.cols;
      e.y = (row + 0.5) / grid.rows;
      e.down = true;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace creadet::testing
