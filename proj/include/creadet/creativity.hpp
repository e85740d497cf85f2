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
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "creadet/event_stream.hpp"
#include "creadet/grid.hpp"
#include "creadet/markov.hpp"

namespace creadet::creativity {

enum class ModelClass { markov, multinomial };

/// split_vs_pooled compares separate past/future models against one model
/// fit on both windows. split_vs_future compares them against the future
/// model explaining both windows.
enum class Variant { split_vs_pooled, split_vs_future };

/// How nu is counted for the Markov class. pooled_support uses the free
/// parameters of the model fit on both windows; split_difference uses
/// nu_past + nu_future - nu_pooled. Multinomials always use occupied bins.
enum class DofRule { pooled_support, split_difference };

/// Window length: a fixed number of events, or everything available.
struct WindowLength {
  std::optional<std::size_t> length;

  static WindowLength all() { return {}; }
  static WindowLength fixed(std::size_t n) { return {n}; }
  bool is_all() const { return !length.has_value(); }
};

/// Decides whether the split point t (past = [.., t), future = [t, ..)) is evaluated.
using EvalPredicate = std::function<bool(const EventStream&, std::size_t)>;

EvalPredicate every_point();
/// True where the last past event is an off-screen state, i.e. right after a
/// finger lift.
EvalPredicate after_offscreen(const GridSpec& grid);

struct WindowSpec {
  WindowLength kappa = WindowLength::all();
  WindowLength tau = WindowLength::all();
  EvalPredicate eval_points = every_point();
  Variant variant = Variant::split_vs_pooled;
  /// Both windows must hold at least this many events.
  std::size_t min_window = 1;
};

struct MeasureOptions {
  ModelClass model_class = ModelClass::markov;
  markov::FitOptions fit;
  int n_states = 18;
  DofRule dof_rule = DofRule::pooled_support;
};

struct CreativityPoint {
  double c = 0.0;
  int nu = 1;
  /// The future model gives the past zero probability (split_vs_future
  /// only); `c` is then meaningless.
  bool infinite_evidence = false;
};

struct CreativityRecord {
  std::size_t t = 0;
  double c = 0.0;
  int nu = 1;
  double c_scaled = 0.0;
  bool infinite_evidence = false;
};

struct CreativityTrace {
  std::vector<CreativityRecord> records;
  Variant variant = Variant::split_vs_pooled;
  ModelClass model_class = ModelClass::markov;
  double sigma = 1.0;
};

struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
};

/// Past and future windows around t in a stream of n events, or nullopt if
/// either would be shorter than spec.min_window (or empty) or run off the
/// stream.
std::optional<std::pair<Window, Window>> resolve_windows(std::size_t n, std::size_t t,
                                                         const WindowLength& kappa,
                                                         const WindowLength& tau,
                                                         std::size_t min_window = 1);

/// Log likelihood ratio of "past and future come from different models"
/// against the variant's null, evaluated at split point t. The transition
/// x[t-1] -> x[t] belongs to neither window.
CreativityPoint creativity_at(const EventStream& stream, std::size_t t, const WindowSpec& spec,
                              const MeasureOptions& opts);

/// Same measure from two (possibly fractional) state histograms, multinomial class.
CreativityPoint creativity_from_histograms(const Eigen::VectorXd& past, const Eigen::VectorXd& future,
                                           Variant variant, const markov::FitOptions& fit);

/// Evaluates every split point admitted by `spec`. Throws DomainError if
/// no point qualifies.
CreativityTrace scan(const EventStream& stream, const WindowSpec& spec, const MeasureOptions& opts);

struct Peak {
  std::size_t t = 0;
  double c_scaled = 0.0;
};

/// Interior local maxima of c_scaled strictly above threshold. A plateau
/// counts once, at its leftmost record, when it rises above both flanks.
std::vector<Peak> detect_peaks(const CreativityTrace& trace, double threshold);

enum class Kernel { box, exponential };

struct SmoothingSpec {
  double sigma = 1.0;
  Kernel kernel = Kernel::box;
};

/// Low-pass filtered one-hot encoding: row t holds the fractional state
/// weights at time t (each row sums to 1). The box kernel spans ceil(sigma)
/// taps rounded up to odd; the exponential kernel weighs offset k by
/// exp(-|k| / sigma). Taps falling off either end of the stream are dropped
/// and the rest renormalized.
Eigen::MatrixXd smooth(const EventStream& stream, const SmoothingSpec& spec, int n_states);

/// One trace per sigma, each scanned on the sigma-smoothed soft counts with
/// fixed windows scaled to ceil(sigma * length). Multinomial class only. A
/// sigma that admits no split point yields an empty trace.
std::vector<CreativityTrace> multiscale_scan(const EventStream& stream, const WindowSpec& base_spec,
                                             std::span<const double> sigmas, const MeasureOptions& opts,
                                             Kernel kernel = Kernel::box);

std::string_view to_string(Variant v);
std::string_view to_string(ModelClass m);

}  // namespace creadet::creativity
