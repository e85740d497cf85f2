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

#include <span>
#include <vector>

#include "creadet/event_stream.hpp"

namespace creadet {

/// Touch-grid state layout. Cells are indexed row-major from the bottom-left,
/// cell(r, c) = cols * r + c. On-screen states are the cells themselves;
/// off-screen state cell + cell_count() means "finger lifted, last touched
/// that cell". The default 3x3 grid therefore has 18 states.
struct GridSpec {
  int rows = 3;
  int cols = 3;

  int cell_count() const { return rows * cols; }
  int state_count() const { return 2 * cell_count(); }
  State cell(int row, int col) const { return cols * row + col; }
  bool is_offscreen(State s) const { return s >= cell_count(); }
  State offscreen_of(State cell) const { return cell + cell_count(); }
  State cell_of(State offscreen) const { return offscreen - cell_count(); }
};

/// Builds a stream whose sessions split at every off-screen -> on-screen
/// transition.
EventStream split_sessions(std::vector<State> states, const GridSpec& grid,
                           std::vector<double> times = {});

}  // namespace creadet
