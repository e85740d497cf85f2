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

#include "creadet/creativity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "creadet/error.hpp"
#include "creadet/stats.hpp"

namespace creadet::creativity {

namespace {

using markov::LogLikelihood;
using markov::TransitionCounts;

Eigen::VectorXd histogram(const EventStream& stream, const Window& w, int n_states) {
  Eigen::VectorXd h = Eigen::VectorXd::Zero(n_states);
  for (std::size_t k = w.begin; k < w.end; ++k) {
    const State s = stream[k];
    if (s >= n_states) {
      throw DomainError("state " + std::to_string(s) + " at index " + std::to_string(k) + " out of range");
    }
    h(s) += 1.0;
  }
  return h;
}

// sum_i h_i ln q_i with q = (h_model + lambda) / (H + N lambda); nullopt if q vanishes on data.
std::optional<double> multinomial_ll(const Eigen::VectorXd& data, const Eigen::VectorXd& model_counts,
                                     double pseudocount) {
  const Eigen::VectorXd q =
      (model_counts.array() + pseudocount) / (model_counts.sum() + pseudocount * double(model_counts.size()));
  double ll = 0.0;
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    if (data(i) <= 0) continue;
    if (q(i) <= 0) return std::nullopt;
    ll += data(i) * std::log(q(i));
  }
  return ll;
}

double own_fit_ll(const TransitionCounts& counts, const markov::FitOptions& fit) {
  const LogLikelihood ll = markov::log_likelihood(markov::fit(counts, fit), counts);
  if (!ll.ok()) throw std::logic_error("creativity: model fails to explain its own training data");
  return ll.value;
}

CreativityPoint markov_point(const EventStream& stream, const Window& past_w, const Window& future_w,
                             Variant variant, const MeasureOptions& opts) {
  const TransitionCounts past = markov::count_window(stream, past_w.begin, past_w.end, opts.n_states);
  const TransitionCounts future = markov::count_window(stream, future_w.begin, future_w.end, opts.n_states);
  const TransitionCounts pooled = past + future;

  CreativityPoint point;
  if (variant == Variant::split_vs_pooled) {
    point.c = own_fit_ll(past, opts.fit) + own_fit_ll(future, opts.fit) - own_fit_ll(pooled, opts.fit);
    if (opts.fit.pseudocount == 0.0) point.c = std::max(point.c, 0.0);
  } else {
    const LogLikelihood cross = markov::log_likelihood(markov::fit(future, opts.fit), past);
    if (cross.ok()) {
      point.c = own_fit_ll(past, opts.fit) - cross.value;
    } else {
      point.infinite_evidence = true;
    }
  }

  int nu = 0;
  if (opts.dof_rule == DofRule::pooled_support) {
    nu = markov::free_parameters(pooled);
  } else {
    nu = markov::free_parameters(past) + markov::free_parameters(future) - markov::free_parameters(pooled);
  }
  point.nu = std::max(nu, 1);
  return point;
}

}  // namespace

EvalPredicate every_point() {
  return [](const EventStream&, std::size_t) { return true; };
}

EvalPredicate after_offscreen(const GridSpec& grid) {
  return [grid](const EventStream& stream, std::size_t t) { return t > 0 && grid.is_offscreen(stream[t - 1]); };
}

std::optional<std::pair<Window, Window>> resolve_windows(std::size_t n, std::size_t t, const WindowLength& kappa,
                                                         const WindowLength& tau, std::size_t min_window) {
  if (t == 0 || t >= n) return std::nullopt;
  Window past{0, t};
  Window future{t, n};
  if (!kappa.is_all()) {
    if (*kappa.length > t) return std::nullopt;
    past.begin = t - *kappa.length;
  }
  if (!tau.is_all()) {
    if (*tau.length > n - t) return std::nullopt;
    future.end = t + *tau.length;
  }
  const std::size_t least = std::max<std::size_t>(min_window, 1);
  if (past.size() < least || future.size() < least) return std::nullopt;
  return std::make_pair(past, future);
}

CreativityPoint creativity_from_histograms(const Eigen::VectorXd& past, const Eigen::VectorXd& future,
                                           Variant variant, const markov::FitOptions& fit) {
  if (!(fit.pseudocount >= 0)) throw DomainError("creativity: pseudocount must be >= 0");
  CreativityPoint point;
  point.nu = std::max(stats::degrees_of_freedom(past, future), 1);
  if (variant == Variant::split_vs_pooled) {
    if (fit.pseudocount == 0.0) {
      point.c = stats::two_way_L(past, future);
      return point;
    }
    const Eigen::VectorXd pooled = past + future;
    point.c = *multinomial_ll(past, past, fit.pseudocount) + *multinomial_ll(future, future, fit.pseudocount) -
              *multinomial_ll(pooled, pooled, fit.pseudocount);
    return point;
  }
  const auto cross = multinomial_ll(past, future, fit.pseudocount);
  if (!cross) {
    point.infinite_evidence = true;
    return point;
  }
  point.c = *multinomial_ll(past, past, fit.pseudocount) - *cross;
  return point;
}

CreativityPoint creativity_at(const EventStream& stream, std::size_t t, const WindowSpec& spec,
                              const MeasureOptions& opts) {
  const auto windows = resolve_windows(stream.size(), t, spec.kappa, spec.tau, spec.min_window);
  if (!windows) {
    throw DomainError("creativity_at: past or future window is empty or runs off the stream at t=" +
                      std::to_string(t));
  }
  if (spec.variant == Variant::split_vs_future && !(opts.fit.pseudocount > 0)) {
    throw DomainError("creativity_at: split_vs_future needs a positive pseudocount");
  }
  if (opts.n_states < 1) throw DomainError("creativity_at: n_states must be >= 1");
  const auto& [past, future] = *windows;
  if (opts.model_class == ModelClass::markov) return markov_point(stream, past, future, spec.variant, opts);
  return creativity_from_histograms(histogram(stream, past, opts.n_states),
                                    histogram(stream, future, opts.n_states), spec.variant, opts.fit);
}

CreativityTrace scan(const EventStream& stream, const WindowSpec& spec, const MeasureOptions& opts) {
  CreativityTrace trace;
  trace.variant = spec.variant;
  trace.model_class = opts.model_class;
  for (std::size_t t = 1; t < stream.size(); ++t) {
    if (!resolve_windows(stream.size(), t, spec.kappa, spec.tau, spec.min_window)) continue;
    if (!spec.eval_points(stream, t)) continue;
    const CreativityPoint p = creativity_at(stream, t, spec, opts);
    trace.records.push_back({t, p.c, p.nu, p.c / p.nu, p.infinite_evidence});
  }
  if (trace.records.empty()) throw DomainError("scan: no valid evaluation points");
  return trace;
}

std::vector<Peak> detect_peaks(const CreativityTrace& trace, double threshold) {
  if (!(threshold >= 0)) throw DomainError("detect_peaks: threshold must be >= 0");
  const auto& r = trace.records;
  std::vector<Peak> peaks;
  std::size_t i = 1;
  while (i + 1 < r.size()) {
    if (!(r[i].c_scaled > r[i - 1].c_scaled)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < r.size() && r[j + 1].c_scaled == r[i].c_scaled) ++j;
    if (j + 1 < r.size() && r[j + 1].c_scaled < r[i].c_scaled && r[i].c_scaled > threshold) {
      peaks.push_back({r[i].t, r[i].c_scaled});
    }
    i = j + 1;
  }
  return peaks;
}

Eigen::MatrixXd smooth(const EventStream& stream, const SmoothingSpec& spec, int n_states) {
  if (!(spec.sigma > 0)) throw DomainError("smooth: sigma must be positive");
  stream.check_states(n_states);
  const auto n = static_cast<long>(stream.size());

  std::vector<double> taps;  // taps[k] weighs offset +-k
  if (spec.kernel == Kernel::box) {
    long width = static_cast<long>(std::ceil(spec.sigma));
    if (width % 2 == 0) ++width;
    taps.assign(static_cast<std::size_t>(width / 2 + 1), 1.0);
  } else {
    // beyond this radius exp(-k / sigma) < 1e-12
    const long radius = static_cast<long>(std::floor(spec.sigma * std::log(1e12)));
    for (long k = 0; k <= radius; ++k) taps.push_back(std::exp(-double(k) / spec.sigma));
  }
  const long radius = static_cast<long>(taps.size()) - 1;

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n_states);
  for (long t = 0; t < n; ++t) {
    double mass = 0.0;
    for (long k = -radius; k <= radius; ++k) {
      const long u = t + k;
      if (u < 0 || u >= n) continue;
      const double w = taps[static_cast<std::size_t>(std::abs(k))];
      out(t, stream[static_cast<std::size_t>(u)]) += w;
      mass += w;
    }
    out.row(t) /= mass;
  }
  return out;
}

std::vector<CreativityTrace> multiscale_scan(const EventStream& stream, const WindowSpec& base_spec,
                                             std::span<const double> sigmas, const MeasureOptions& opts,
                                             Kernel kernel) {
  if (opts.model_class != ModelClass::multinomial) {
    throw DomainError("multiscale_scan: smoothing is only defined for the multinomial model class");
  }
  if (base_spec.variant == Variant::split_vs_future && !(opts.fit.pseudocount > 0)) {
    throw DomainError("multiscale_scan: split_vs_future needs a positive pseudocount");
  }
  const auto scaled = [](const WindowLength& w, double sigma) {
    if (w.is_all()) return w;
    return WindowLength::fixed(static_cast<std::size_t>(std::ceil(sigma * double(*w.length))));
  };

  std::vector<CreativityTrace> traces;
  for (double sigma : sigmas) {
    const Eigen::MatrixXd soft = smooth(stream, {sigma, kernel}, opts.n_states);
    const WindowLength kappa = scaled(base_spec.kappa, sigma);
    const WindowLength tau = scaled(base_spec.tau, sigma);

    CreativityTrace trace;
    trace.variant = base_spec.variant;
    trace.model_class = opts.model_class;
    trace.sigma = sigma;
    for (std::size_t t = 1; t < stream.size(); ++t) {
      const auto windows = resolve_windows(stream.size(), t, kappa, tau, base_spec.min_window);
      if (!windows || !base_spec.eval_points(stream, t)) continue;
      const auto& [past, future] = *windows;
      const Eigen::VectorXd h_past =
          soft.middleRows(static_cast<Eigen::Index>(past.begin), static_cast<Eigen::Index>(past.size()))
              .colwise()
              .sum()
              .transpose();
      const Eigen::VectorXd h_future =
          soft.middleRows(static_cast<Eigen::Index>(future.begin), static_cast<Eigen::Index>(future.size()))
              .colwise()
              .sum()
              .transpose();
      const CreativityPoint p = creativity_from_histograms(h_past, h_future, base_spec.variant, opts.fit);
      trace.records.push_back({t, p.c, p.nu, p.c / p.nu, p.infinite_evidence});
    }
    traces.push_back(std::move(trace));
  }
  return traces;
}

std::string_view to_string(Variant v) { return v == Variant::split_vs_pooled ? "pooled" : "future"; }

std::string_view to_string(ModelClass m) { return m == ModelClass::markov ? "markov" : "multinomial"; }

}  // namespace creadet::creativity
