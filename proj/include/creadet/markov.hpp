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
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "creadet/event_stream.hpp"

namespace creadet::markov {

/// Session-start and transition counts over an N-state alphabet. Counts are
/// real-valued so that weighted counts compose with the same code.
struct TransitionCounts {
  explicit TransitionCounts(int n_states = 0)
      : starts(Eigen::VectorXd::Zero(n_states)), transitions(Eigen::MatrixXd::Zero(n_states, n_states)) {}

  int n_states() const { return static_cast<int>(starts.size()); }

  TransitionCounts& operator+=(const TransitionCounts& other);
  friend TransitionCounts operator+(TransitionCounts a, const TransitionCounts& b) { return a += b; }

  Eigen::VectorXd starts;
  Eigen::MatrixXd transitions;
};

TransitionCounts count_transitions(const EventStream& stream, int n_states);

/// Counts restricted to events [begin, end). The window is treated as
/// self-contained: its first event and every session start inside it count
/// as session starts, and the transition into `begin` is dropped.
TransitionCounts count_window(const EventStream& stream, std::size_t begin, std::size_t end, int n_states);

struct FitOptions {
  /// Additive smoothing applied to start and transition counts.
  double pseudocount = 0.0;
};

/// Initial distribution pi and row-stochastic transition matrix theta.
///
/// A row of theta that is entirely zero marks a source state with no
/// observed mass; it is flagged rather than filled in, and any likelihood
/// evaluation touching it reports LogLikelihood::Status::unobserved_row.
class MarkovModel {
 public:
  MarkovModel(Eigen::VectorXd pi, Eigen::MatrixXd theta);

  int n_states() const { return static_cast<int>(pi_.size()); }
  const Eigen::VectorXd& pi() const { return pi_; }
  const Eigen::MatrixXd& theta() const { return theta_; }
  bool row_observed(int i) const { return observed_[static_cast<std::size_t>(i)] != 0; }

 private:
  Eigen::VectorXd pi_;
  Eigen::MatrixXd theta_;
  std::vector<char> observed_;
};

/// Log likelihood in nats, or a marker saying why it does not exist.
struct LogLikelihood {
  enum class Status { ok, zero_probability, unobserved_row };

  double value = 0.0;
  Status status = Status::ok;

  bool ok() const { return status == Status::ok; }
};

MarkovModel fit(const EventStream& stream, int n_states, const FitOptions& opts = {});
MarkovModel fit(const TransitionCounts& counts, const FitOptions& opts = {});

/// Sum over sessions of ln pi(first) + sum_t ln theta(x_t, x_t+1).
LogLikelihood log_likelihood(const MarkovModel& model, const EventStream& stream);
LogLikelihood log_likelihood(const MarkovModel& model, const TransitionCounts& counts);

/// mt19937_64 is fully specified by the standard, so sampled streams are
/// bit-identical across platforms. Draws never go through std distributions
/// (whose algorithms are implementation-defined); see uniform01.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
double uniform01(Rng& rng);

/// Index drawn from a (not necessarily normalized) nonnegative weight row.
int draw_index(const Eigen::Ref<const Eigen::VectorXd>& weights, Rng& rng);

std::vector<State> sample_session(const MarkovModel& model, std::size_t length, Rng& rng);
EventStream sample(const MarkovModel& model, std::span<const std::size_t> session_lengths, Rng& rng);
EventStream sample(const MarkovModel& model, std::span<const std::size_t> session_lengths,
                   std::uint64_t seed);

/// Adds epsilon to every entry of pi and theta, then renormalizes.
MarkovModel perturb(const MarkovModel& model, double epsilon);

/// Independent parameters of the maximum-likelihood fit restricted to the
/// observed support: occupied transition cells - active source states
/// + distinct start states - 1, floored at 0.
int free_parameters(const TransitionCounts& counts);
int free_parameters(const EventStream& stream, int n_states);

}  // namespace creadet::markov
