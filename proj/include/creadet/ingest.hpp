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

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "creadet/event_stream.hpp"
#include "creadet/grid.hpp"

namespace creadet::ingest {

/// One touch sample in normalized screen coordinates (origin bottom-left).
struct TouchEvent {
  double time = 0.0;
  double x = 0.0;
  double y = 0.0;
  bool down = false;

  bool operator==(const TouchEvent&) const = default;
};

/// Grid cell under (x, y); coordinates equal to 1.0 fall into the top/right cells.
State quantize_point(double x, double y, const GridSpec& grid = {});

/// Converts touch samples into grid states. Contacts map to their cell, a
/// run of lifted samples maps to one off-screen state for the last touched
/// cell, repeated states collapse to one event (keeping the first
/// timestamp), lifted samples before the first contact are dropped, and
/// sessions split at every off-screen -> on-screen transition.
EventStream quantize(std::span<const TouchEvent> events, const GridSpec& grid = {});

/// Touch CSV: header `time,x,y,down`, down in {0,1}, timestamps nondecreasing.
std::vector<TouchEvent> read_touch_csv(std::istream& in);
std::vector<TouchEvent> read_touch_csv(const std::filesystem::path& path);
void write_touch_csv(std::ostream& out, std::span<const TouchEvent> events);

/// State CSV: header `time,state`. Sessions are recovered with the grid's
/// off-screen -> on-screen rule.
EventStream read_state_csv(std::istream& in, const GridSpec& grid = {});
EventStream read_state_csv(const std::filesystem::path& path, const GridSpec& grid = {});
/// Writes event timestamps, or event indices when the stream has none.
void write_state_csv(std::ostream& out, const EventStream& stream);

}  // namespace creadet::ingest
