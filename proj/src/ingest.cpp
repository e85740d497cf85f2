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

#include "creadet/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "creadet/csv.hpp"
#include "creadet/error.hpp"

namespace creadet::ingest {

State quantize_point(double x, double y, const GridSpec& grid) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("quantize_point: coordinates must lie in [0, 1]");
  }
  const int col = std::min(static_cast<int>(std::floor(x * grid.cols)), grid.cols - 1);
  const int row = std::min(static_cast<int>(std::floor(y * grid.rows)), grid.rows - 1);
  return grid.cell(row, col);
}

EventStream quantize(std::span<const TouchEvent> events, const GridSpec& grid) {
  if (events.empty()) throw DomainError("quantize: no touch events");
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].time < events[i - 1].time) {
      throw DomainError("quantize: timestamps decrease at event " + std::to_string(i));
    }
  }
  const auto first_down = std::find_if(events.begin(), events.end(), [](const TouchEvent& e) { return e.down; });
  if (first_down == events.end()) throw DomainError("quantize: no finger contact in input");

  std::vector<State> states;
  std::vector<double> times;
  State last_cell = 0;
  for (auto it = first_down; it != events.end(); ++it) {
    State s;
    if (it->down) {
      s = quantize_point(it->x, it->y, grid);
      last_cell = s;
    } else {
      s = grid.offscreen_of(last_cell);
    }
    if (!states.empty() && states.back() == s) continue;
    states.push_back(s);
    times.push_back(it->time);
  }
  return split_sessions(std::move(states), grid, std::move(times));
}

std::vector<TouchEvent> read_touch_csv(std::istream& in) {
  io::CsvReader reader(in, {"time", "x", "y", "down"});
  const std::size_t c_time = reader.column("time");
  const std::size_t c_x = reader.column("x");
  const std::size_t c_y = reader.column("y");
  const std::size_t c_down = reader.column("down");

  std::vector<TouchEvent> events;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    TouchEvent e;
    e.time = reader.parse_double(f[c_time], "time");
    e.x = reader.parse_double(f[c_x], "x");
    e.y = reader.parse_double(f[c_y], "y");
    const long long down = reader.parse_integer(f[c_down], "down");
    if (down != 0 && down != 1) throw ParseError("down must be 0 or 1, got " + std::to_string(down), reader.row());
    e.down = down == 1;
    if (!(e.time >= 0) || !std::isfinite(e.time)) throw ParseError("time must be finite and >= 0", reader.row());
    if (!events.empty() && e.time < events.back().time) {
      throw ParseError("timestamp decreases", reader.row());
    }
    if (e.down && !(e.x >= 0 && e.x <= 1 && e.y >= 0 && e.y <= 1)) {
      throw ParseError("contact coordinates must lie in [0, 1]", reader.row());
    }
    events.push_back(e);
  }
  if (events.empty()) throw EmptyInputError("empty input: no touch events");
  return events;
}

std::vector<TouchEvent> read_touch_csv(const std::filesystem::path& path) {
  auto in = io::open_input(path);
  return read_touch_csv(in);
}

void write_touch_csv(std::ostream& out, std::span<const TouchEvent> events) {
  out << "time,x,y,down\n";
  for (const auto& e : events) {
    out << io::format_double(e.time) << ',' << io::format_double(e.x) << ',' << io::format_double(e.y) << ','
        << (e.down ? 1 : 0) << '\n';
  }
}

EventStream read_state_csv(std::istream& in, const GridSpec& grid) {
  io::CsvReader reader(in, {"time", "state"});
  const std::size_t c_time = reader.column("time");
  const std::size_t c_state = reader.column("state");
  std::vector<State> states;
  std::vector<double> times;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    times.push_back(reader.parse_double(f[c_time], "time"));
    const long long s = reader.parse_integer(f[c_state], "state");
    if (s < 0 || s >= grid.state_count()) {
      throw ParseError("state " + std::to_string(s) + " out of range [0, " + std::to_string(grid.state_count()) + ")",
                       reader.row());
    }
    states.push_back(static_cast<State>(s));
  }
  if (states.empty()) throw EmptyInputError("empty input: no state rows");
  return split_sessions(std::move(states), grid, std::move(times));
}

EventStream read_state_csv(const std::filesystem::path& path, const GridSpec& grid) {
  auto in = io::open_input(path);
  return read_state_csv(in, grid);
}

void write_state_csv(std::ostream& out, const EventStream& stream) {
  out << "time,state\n";
  const auto times = stream.times();
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (stream.has_times()) {
      out << io::format_double(times[i]);
    } else {
      out << i;
    }
    out << ',' << stream[i] << '\n';
  }
}

}  // namespace creadet::ingest
