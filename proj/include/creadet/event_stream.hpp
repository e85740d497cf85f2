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
#include <span>
#include <vector>

namespace creadet {

using State = int;

/// Time-ordered state indices partitioned into sessions. A session is one
/// contiguous run generated from a fresh start of the process; transitions
/// are never counted across a session boundary.
///
/// Storage is flat: `states()` holds every event and `session_starts()` the
/// index of the first event of each session (first entry 0, strictly
/// increasing). Optional per-event timestamps ride along for plotting.
class EventStream {
 public:
  EventStream() = default;
  EventStream(std::vector<State> states, std::vector<std::size_t> session_starts,
              std::vector<double> times = {});

  static EventStream from_sessions(const std::vector<std::vector<State>>& sessions);
  static EventStream single_session(std::vector<State> states);

  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  State operator[](std::size_t i) const { return states_[i]; }

  std::span<const State> states() const { return states_; }
  std::span<const double> times() const { return times_; }
  bool has_times() const { return !times_.empty(); }

  std::size_t session_count() const { return session_starts_.size(); }
  std::span<const State> session(std::size_t i) const;
  const std::vector<std::size_t>& session_starts() const { return session_starts_; }
  bool starts_session(std::size_t i) const { return is_start_[i] != 0; }

  /// Appends `other` as new sessions after this stream's last session.
  void append(const EventStream& other);

  /// Throws DomainError unless every state lies in [0, n_states).
  void check_states(int n_states) const;

  bool operator==(const EventStream&) const = default;

 private:
  std::vector<State> states_;
  std::vector<std::size_t> session_starts_;
  std::vector<double> times_;
  std::vector<char> is_start_;
};

}  // namespace creadet
