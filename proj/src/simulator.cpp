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

#include "creadet/simulator.hpp"

#include <algorithm>

#include "creadet/error.hpp"

namespace creadet::simulator {

namespace {

markov::MarkovModel deterministic_chain(const GridSpec& grid, const std::vector<State>& successor) {
  const int n = grid.state_count();
  Eigen::VectorXd pi = Eigen::VectorXd::Zero(n);
  pi(0) = 1.0;
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(n, n);
  for (int s = 0; s < n; ++s) theta(s, successor[static_cast<std::size_t>(s)]) = 1.0;
  return markov::MarkovModel(std::move(pi), std::move(theta));
}

}  // namespace

StyleDefinition build_linear_style(const GridSpec& grid) {
  std::vector<State> next(static_cast<std::size_t>(grid.state_count()));
  for (int r = 0; r < grid.rows; ++r) {
    const State next_row_start = grid.cell((r + 1) % grid.rows, 0);
    for (int c = 0; c < grid.cols; ++c) {
      const State cell = grid.cell(r, c);
      next[static_cast<std::size_t>(cell)] = c + 1 < grid.cols ? grid.cell(r, c + 1) : grid.offscreen_of(cell);
      next[static_cast<std::size_t>(grid.offscreen_of(cell))] = next_row_start;
    }
  }
  return {"linear", deterministic_chain(grid, next)};
}

StyleDefinition build_loopy_style(const GridSpec& grid) {
  if (grid.rows < 2 || grid.cols < 2) throw DomainError("build_loopy_style: grid needs at least 2x2 cells");
  std::vector<State> lap;
  for (int c = 0; c < grid.cols; ++c) lap.push_back(grid.cell(0, c));
  for (int r = 1; r < grid.rows; ++r) lap.push_back(grid.cell(r, grid.cols - 1));
  for (int c = grid.cols - 2; c >= 0; --c) lap.push_back(grid.cell(grid.rows - 1, c));
  for (int r = grid.rows - 2; r >= 1; --r) lap.push_back(grid.cell(r, 0));

  std::vector<State> next(static_cast<std::size_t>(grid.state_count()));
  for (State cell = 0; cell < grid.cell_count(); ++cell) {
    next[static_cast<std::size_t>(cell)] = grid.offscreen_of(cell);
    next[static_cast<std::size_t>(grid.offscreen_of(cell))] = 0;
  }
  for (std::size_t i = 0; i + 1 < lap.size(); ++i) next[static_cast<std::size_t>(lap[i])] = lap[i + 1];
  return {"loopy", deterministic_chain(grid, next)};
}

StyleCatalog default_catalog(const GridSpec& grid) {
  StyleCatalog catalog;
  auto linear = build_linear_style(grid);
  auto loopy = build_loopy_style(grid);
  catalog.emplace(linear.name, std::move(linear.model));
  catalog.emplace(loopy.name, std::move(loopy.model));
  return catalog;
}

Schedule canonical_schedule(double epsilon, std::uint64_t seed) {
  Schedule s;
  for (const char* style : {"linear", "linear", "linear", "loopy", "linear", "loopy", "linear", "loopy"}) {
    s.blocks.push_back({style, 300});
  }
  s.epsilon = epsilon;
  s.seed = seed;
  return s;
}

EventStream run_schedule(const Schedule& schedule, const StyleCatalog& styles, const GridSpec& grid) {
  if (!(schedule.epsilon >= 0)) throw DomainError("run_schedule: epsilon must be >= 0");
  markov::Rng rng(schedule.seed);
  std::vector<State> states;
  for (const auto& block : schedule.blocks) {
    const auto it = styles.find(block.style);
    if (it == styles.end()) throw DomainError("run_schedule: unknown style '" + block.style + "'");
    if (block.length < 1) throw DomainError("run_schedule: block lengths must be >= 1");
    if (it->second.n_states() != grid.state_count()) {
      throw DomainError("run_schedule: style '" + block.style + "' does not match the grid's state count");
    }
    const markov::MarkovModel model = markov::perturb(it->second, schedule.epsilon);
    const auto part = markov::sample_session(model, block.length, rng);
    states.insert(states.end(), part.begin(), part.end());
  }
  return split_sessions(std::move(states), grid);
}

creativity::WindowSpec figure2_window_spec(const GridSpec& grid) {
  creativity::WindowSpec spec;
  spec.kappa = creativity::WindowLength::all();
  spec.tau = creativity::WindowLength::all();
  spec.eval_points = creativity::after_offscreen(grid);
  spec.variant = creativity::Variant::split_vs_pooled;
  return spec;
}

creativity::MeasureOptions figure2_measure_options(const GridSpec& grid) {
  creativity::MeasureOptions opts;
  opts.model_class = creativity::ModelClass::markov;
  opts.n_states = grid.state_count();
  return opts;
}

std::vector<double> figure2_epsilons() { return {0.0, 1e-5, 1e-4, 1e-3}; }

std::vector<Figure2Run> figure2_experiment(std::span<const double> epsilons, std::uint64_t seed,
                                           const StyleCatalog& styles) {
  if (epsilons.empty()) throw DomainError("figure2_experiment: need at least one epsilon");
  const GridSpec grid;
  std::vector<Figure2Run> runs;
  for (double eps : epsilons) {
    const EventStream stream = run_schedule(canonical_schedule(eps, seed), styles, grid);
    runs.push_back({eps, creativity::scan(stream, figure2_window_spec(grid), figure2_measure_options(grid))});
  }
  return runs;
}

const creativity::CreativityRecord& peak_record(const creativity::CreativityTrace& trace) {
  if (trace.records.empty()) throw DomainError("peak_record: empty trace");
  return *std::max_element(trace.records.begin(), trace.records.end(),
                           [](const auto& a, const auto& b) { return a.c_scaled < b.c_scaled; });
}

double peak_to_median_ratio(const creativity::CreativityTrace& trace, std::size_t t_lo, std::size_t t_hi) {
  std::vector<double> tail;
  for (const auto& r : trace.records) {
    if (r.t >= t_lo && r.t <= t_hi) tail.push_back(r.c_scaled);
  }
  if (tail.empty()) throw DomainError("peak_to_median_ratio: no records in the reference range");
  std::sort(tail.begin(), tail.end());
  const std::size_t m = tail.size() / 2;
  const double median = tail.size() % 2 == 1 ? tail[m] : 0.5 * (tail[m - 1] + tail[m]);
  return peak_record(trace).c_scaled / median;
}

}  // namespace creadet::simulator
