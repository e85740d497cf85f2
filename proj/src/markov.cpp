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

#include "creadet/markov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "creadet/error.hpp"

namespace creadet::markov {

namespace {

constexpr double kStochasticTolerance = 1e-9;

void accumulate(const EventStream& stream, std::size_t begin, std::size_t end, TransitionCounts& counts) {
  const auto states = stream.states();
  for (std::size_t k = begin; k < end; ++k) {
    if (k == begin || stream.starts_session(k)) {
      counts.starts(states[k]) += 1.0;
    } else {
      counts.transitions(states[k - 1], states[k]) += 1.0;
    }
  }
}

Eigen::VectorXd normalized(const Eigen::VectorXd& counts, double pseudocount) {
  Eigen::VectorXd v = counts.array() + pseudocount;
  const double total = v.sum();
  if (total > 0) v /= total;
  return v;
}

}  // namespace

TransitionCounts& TransitionCounts::operator+=(const TransitionCounts& other) {
  if (other.n_states() != n_states()) throw DomainError("TransitionCounts: state count mismatch");
  starts += other.starts;
  transitions += other.transitions;
  return *this;
}

TransitionCounts count_transitions(const EventStream& stream, int n_states) {
  return count_window(stream, 0, stream.size(), n_states);
}

TransitionCounts count_window(const EventStream& stream, std::size_t begin, std::size_t end, int n_states) {
  if (n_states < 1) throw DomainError("count_window: n_states must be >= 1");
  if (begin > end || end > stream.size()) throw DomainError("count_window: window out of range");
  for (std::size_t k = begin; k < end; ++k) {
    if (stream[k] >= n_states) {
      throw DomainError("count_window: state " + std::to_string(stream[k]) + " at index " +
                        std::to_string(k) + " out of range");
    }
  }
  TransitionCounts counts(n_states);
  accumulate(stream, begin, end, counts);
  return counts;
}

MarkovModel::MarkovModel(Eigen::VectorXd pi, Eigen::MatrixXd theta)
    : pi_(std::move(pi)), theta_(std::move(theta)) {
  const Eigen::Index n = pi_.size();
  if (n < 1) throw DomainError("MarkovModel: need at least one state");
  if (theta_.rows() != n || theta_.cols() != n) throw DomainError("MarkovModel: theta must be N x N");
  if (!pi_.allFinite() || !theta_.allFinite() || (pi_.array() < 0).any() || (theta_.array() < 0).any()) {
    throw DomainError("MarkovModel: probabilities must be finite and nonnegative");
  }
  if (std::abs(pi_.sum() - 1.0) > kStochasticTolerance) throw DomainError("MarkovModel: pi must sum to 1");
  observed_.assign(static_cast<std::size_t>(n), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double row = theta_.row(i).sum();
    if (row == 0.0) continue;
    if (std::abs(row - 1.0) > kStochasticTolerance) {
      throw DomainError("MarkovModel: row " + std::to_string(i) + " of theta does not sum to 1");
    }
    observed_[static_cast<std::size_t>(i)] = 1;
  }
}

MarkovModel fit(const TransitionCounts& counts, const FitOptions& opts) {
  if (!(opts.pseudocount >= 0)) throw DomainError("fit: pseudocount must be >= 0");
  const int n = counts.n_states();
  if (n < 1) throw DomainError("fit: n_states must be >= 1");
  if (counts.starts.sum() <= 0 && opts.pseudocount == 0) {
    throw DomainError("fit: empty stream needs a positive pseudocount");
  }
  Eigen::VectorXd pi = normalized(counts.starts, opts.pseudocount);
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    theta.row(i) = normalized(counts.transitions.row(i).transpose(), opts.pseudocount).transpose();
  }
  return MarkovModel(std::move(pi), std::move(theta));
}

MarkovModel fit(const EventStream& stream, int n_states, const FitOptions& opts) {
  return fit(count_transitions(stream, n_states), opts);
}

LogLikelihood log_likelihood(const MarkovModel& model, const EventStream& stream) {
  stream.check_states(model.n_states());
  LogLikelihood ll;
  const auto states = stream.states();
  for (std::size_t k = 0; k < states.size(); ++k) {
    double p;
    if (stream.starts_session(k)) {
      p = model.pi()(states[k]);
    } else {
      if (!model.row_observed(states[k - 1])) return {0.0, LogLikelihood::Status::unobserved_row};
      p = model.theta()(states[k - 1], states[k]);
    }
    if (p <= 0) return {0.0, LogLikelihood::Status::zero_probability};
    ll.value += std::log(p);
  }
  return ll;
}

LogLikelihood log_likelihood(const MarkovModel& model, const TransitionCounts& counts) {
  if (counts.n_states() != model.n_states()) throw DomainError("log_likelihood: state count mismatch");
  LogLikelihood ll;
  const int n = model.n_states();
  for (int i = 0; i < n; ++i) {
    const double c = counts.starts(i);
    if (c <= 0) continue;
    if (model.pi()(i) <= 0) return {0.0, LogLikelihood::Status::zero_probability};
    ll.value += c * std::log(model.pi()(i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double c = counts.transitions(i, j);
      if (c <= 0) continue;
      if (!model.row_observed(i)) return {0.0, LogLikelihood::Status::unobserved_row};
      const double p = model.theta()(i, j);
      if (p <= 0) return {0.0, LogLikelihood::Status::zero_probability};
      ll.value += c * std::log(p);
    }
  }
  return ll;
}

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int draw_index(const Eigen::Ref<const Eigen::VectorXd>& weights, Rng& rng) {
  const double total = weights.sum();
  if (!(total > 0)) throw DomainError("draw_index: weights have no mass");
  const double u = uniform01(rng) * total;
  double cumulative = 0.0;
  int last_positive = -1;
  for (Eigen::Index j = 0; j < weights.size(); ++j) {
    if (weights(j) <= 0) continue;
    last_positive = static_cast<int>(j);
    cumulative += weights(j);
    if (u < cumulative) return last_positive;
  }
  return last_positive;  // u landed in the rounding gap at the top
}

std::vector<State> sample_session(const MarkovModel& model, std::size_t length, Rng& rng) {
  if (length < 1) throw DomainError("sample: session lengths must be >= 1");
  std::vector<State> out;
  out.reserve(length);
  out.push_back(draw_index(model.pi(), rng));
  while (out.size() < length) {
    const State from = out.back();
    if (!model.row_observed(from)) {
      throw DomainError("sample: reached state " + std::to_string(from) + " with no transition row");
    }
    out.push_back(draw_index(model.theta().row(from).transpose(), rng));
  }
  return out;
}

EventStream sample(const MarkovModel& model, std::span<const std::size_t> session_lengths, Rng& rng) {
  std::vector<std::vector<State>> sessions;
  sessions.reserve(session_lengths.size());
  for (std::size_t len : session_lengths) sessions.push_back(sample_session(model, len, rng));
  return EventStream::from_sessions(sessions);
}

EventStream sample(const MarkovModel& model, std::span<const std::size_t> session_lengths,
                   std::uint64_t seed) {
  Rng rng(seed);
  return sample(model, session_lengths, rng);
}

MarkovModel perturb(const MarkovModel& model, double epsilon) {
  if (!(epsilon >= 0)) throw DomainError("perturb: epsilon must be >= 0");
  if (epsilon == 0) return model;
  const int n = model.n_states();
  Eigen::VectorXd pi = normalized(model.pi(), epsilon);
  Eigen::MatrixXd theta(n, n);
  for (int i = 0; i < n; ++i) {
    theta.row(i) = normalized(model.theta().row(i).transpose(), epsilon).transpose();
  }
  return MarkovModel(std::move(pi), std::move(theta));
}

int free_parameters(const TransitionCounts& counts) {
  const auto cells = (counts.transitions.array() > 0).count();
  const auto sources = (counts.transitions.rowwise().sum().array() > 0).count();
  const auto starts = (counts.starts.array() > 0).count();
  const auto k = static_cast<long>(cells) - static_cast<long>(sources) + static_cast<long>(starts) - 1;
  return static_cast<int>(std::max(0L, k));
}

int free_parameters(const EventStream& stream, int n_states) {
  return free_parameters(count_transitions(stream, n_states));
}

}  // namespace creadet::markov
