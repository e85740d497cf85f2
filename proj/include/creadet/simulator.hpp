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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "creadet/creativity.hpp"
#include "creadet/event_stream.hpp"
#include "creadet/grid.hpp"
#include "creadet/markov.hpp"

namespace creadet::simulator {

struct StyleDefinition {
  std::string name;
  markov::MarkovModel model;
};

using StyleCatalog = std::map<std::string, markov::MarkovModel>;

/// Rows swept left to right from the bottom row up, lifting the finger at
/// the end of each row and landing on the leftmost cell of the next row
/// (the top row wraps to the bottom). Every state has exactly one successor.
StyleDefinition build_linear_style(const GridSpec& grid = {});

/// One clockwise lap of the grid perimeter from the bottom-left cell, then a
/// lift and a fresh start at cell 0. On 3x3: 0 1 2 5 8 7 6 3 12 0 ...
/// Interior cells lift straight away; every off-screen state restarts at 0.
StyleDefinition build_loopy_style(const GridSpec& grid = {});

StyleCatalog default_catalog(const GridSpec& grid = {});

struct ScheduleBlock {
  std::string style;
  std::size_t length = 0;
};

struct Schedule {
  std::vector<ScheduleBlock> blocks;
  double epsilon = 0.0;
  std::uint64_t seed = 42;
};

/// Eight blocks of 300 events: l l l o l o l o.
Schedule canonical_schedule(double epsilon, std::uint64_t seed);

/// Samples each block from its epsilon-perturbed style, starting from pi,
/// with one generator shared across blocks, and splits sessions at every
/// off-screen -> on-screen transition.
EventStream run_schedule(const Schedule& schedule, const StyleCatalog& styles, const GridSpec& grid = {});

/// kappa = all history, tau = all remainder, evaluated right after every
/// finger lift, split_vs_pooled.
creativity::WindowSpec figure2_window_spec(const GridSpec& grid = {});
creativity::MeasureOptions figure2_measure_options(const GridSpec& grid = {});

struct Figure2Run {
  double epsilon = 0.0;
  creativity::CreativityTrace trace;
};

std::vector<Figure2Run> figure2_experiment(std::span<const double> epsilons, std::uint64_t seed,
                                           const StyleCatalog& styles = default_catalog());

/// The four noise levels of the reference experiment.
std::vector<double> figure2_epsilons();

/// Record with the largest c_scaled (earliest on ties).
const creativity::CreativityRecord& peak_record(const creativity::CreativityTrace& trace);

/// Peak c_scaled over the median c_scaled of records with t in [t_lo, t_hi].
double peak_to_median_ratio(const creativity::CreativityTrace& trace, std::size_t t_lo = 1200,
                            std::size_t t_hi = 2300);

}  // namespace creadet::simulator
