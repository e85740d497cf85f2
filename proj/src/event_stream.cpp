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

#include "creadet/event_stream.hpp"

#include <algorithm>
#include <string>

#include "creadet/error.hpp"
#include "creadet/grid.hpp"

namespace creadet {

EventStream::EventStream(std::vector<State> states, std::vector<std::size_t> session_starts,
                         std::vector<double> times)
    : states_(std::move(states)), session_starts_(std::move(session_starts)), times_(std::move(times)) {
  if (!times_.empty() && times_.size() != states_.size()) {
    throw DomainError("EventStream: timestamp count does not match event count");
  }
  if (states_.empty()) {
    if (!session_starts_.empty()) throw DomainError("EventStream: sessions declared on empty stream");
    return;
  }
  if (session_starts_.empty() || session_starts_.front() != 0) {
    throw DomainError("EventStream: first session must start at index 0");
  }
  is_start_.assign(states_.size(), 0);
  for (std::size_t i = 0; i < session_starts_.size(); ++i) {
    const std::size_t s = session_starts_[i];
    if (s >= states_.size() || (i > 0 && s <= session_starts_[i - 1])) {
      throw DomainError("EventStream: session starts must be increasing and in range");
    }
    is_start_[s] = 1;
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] < 0) throw DomainError("EventStream: negative state at index " + std::to_string(i));
  }
}

EventStream EventStream::from_sessions(const std::vector<std::vector<State>>& sessions) {
  std::vector<State> states;
  std::vector<std::size_t> starts;
  for (const auto& s : sessions) {
    if (s.empty()) throw DomainError("EventStream: sessions must be non-empty");
    starts.push_back(states.size());
    states.insert(states.end(), s.begin(), s.end());
  }
  return EventStream(std::move(states), std::move(starts));
}

EventStream EventStream::single_session(std::vector<State> states) {
  std::vector<std::size_t> starts;
  if (!states.empty()) starts.push_back(0);
  return EventStream(std::move(states), std::move(starts));
}

std::span<const State> EventStream::session(std::size_t i) const {
  const std::size_t begin = session_starts_.at(i);
  const std::size_t end = i + 1 < session_starts_.size() ? session_starts_[i + 1] : states_.size();
  return std::span<const State>(states_).subspan(begin, end - begin);
}

void EventStream::append(const EventStream& other) {
  if (other.empty()) return;
  if (has_times() != other.has_times() && !empty()) {
    throw DomainError("EventStream::append: cannot mix timed and untimed streams");
  }
  const std::size_t offset = states_.size();
  states_.insert(states_.end(), other.states_.begin(), other.states_.end());
  times_.insert(times_.end(), other.times_.begin(), other.times_.end());
  for (std::size_t s : other.session_starts_) session_starts_.push_back(s + offset);
  is_start_.insert(is_start_.end(), other.is_start_.begin(), other.is_start_.end());
}

void EventStream::check_states(int n_states) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] >= n_states) {
      throw DomainError("state " + std::to_string(states_[i]) + " at index " + std::to_string(i) +
                        " is out of range for " + std::to_string(n_states) + " states");
    }
  }
}

EventStream split_sessions(std::vector<State> states, const GridSpec& grid, std::vector<double> times) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i == 0 || (grid.is_offscreen(states[i - 1]) && !grid.is_offscreen(states[i]))) {
      starts.push_back(i);
    }
  }
  return EventStream(std::move(states), std::move(starts), std::move(times));
}

}  // namespace creadet
