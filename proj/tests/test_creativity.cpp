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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "creadet/creativity.hpp"
#include "creadet/error.hpp"
#include "creadet/stats.hpp"
#include "support.hpp"

using namespace creadet;
using namespace creadet::creativity;

namespace {

Eigen::VectorXd window_histogram(const EventStream& s, std::size_t b, std::size_t e, int n) {
  Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
  for (std::size_t k = b; k < e; ++k) h(s[k]) += 1.0;
  return h;
}

WindowSpec fixed_windows(std::size_t kappa, std::size_t tau) {
  WindowSpec spec;
  spec.kappa = WindowLength::fixed(kappa);
  spec.tau = WindowLength::fixed(tau);
  return spec;
}

CreativityTrace trace_of(std::initializer_list<double> values) {
  CreativityTrace t;
  std::size_t i = 0;
  for (double v : values) t.records.push_back({i++, v, 1, v, false});
  return t;
}

}  // namespace

TEST_CASE("window resolution") {
  CHECK(resolve_windows(10, 5, WindowLength::fixed(5), WindowLength::fixed(5)).has_value());
  CHECK_FALSE(resolve_windows(10, 4, WindowLength::fixed(5), WindowLength::fixed(5)).has_value());
  CHECK_FALSE(resolve_windows(10, 0, WindowLength::all(), WindowLength::all()).has_value());
  CHECK_FALSE(resolve_windows(10, 10, WindowLength::all(), WindowLength::all()).has_value());
  const auto w = resolve_windows(10, 3, WindowLength::all(), WindowLength::fixed(2));
  REQUIRE(w.has_value());
  CHECK(w->first.begin == 0);
  CHECK(w->second.end == 5);
  CHECK_FALSE(resolve_windows(10, 3, WindowLength::all(), WindowLength::all(), 4).has_value());
}

TEST_CASE("identical past and future windows give zero") {
  const auto s = EventStream::single_session({0, 1, 2, 0, 2, 0, 1, 2, 0, 2});
  const auto spec = fixed_windows(5, 5);
  for (auto mc : {ModelClass::markov, ModelClass::multinomial}) {
    MeasureOptions opts;
    opts.model_class = mc;
    opts.n_states = 3;
    CHECK(creativity_at(s, 5, spec, opts).c == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("property: multinomial class reduces to two_way_L") {
  std::mt19937_64 gen(12);
  markov::Rng rng(12);
  MeasureOptions opts;
  opts.model_class = ModelClass::multinomial;
  opts.n_states = 6;
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = testing::random_chain(gen, 6);
    const std::size_t len[] = {80};
    const auto s = markov::sample(model, len, rng);
    const std::size_t t = 1 + gen() % 79;
    const double c = creativity_at(s, t, WindowSpec{}, opts).c;
    REQUIRE(c == stats::two_way_L(window_histogram(s, 0, t, 6), window_histogram(s, t, 80, 6)));
  }
}

TEST_CASE("property: split-vs-pooled is nonnegative, doubling doubles c") {
  std::mt19937_64 gen(21);
  markov::Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_chain(gen, 5);
    const auto b = testing::random_chain(gen, 5);
    const auto s = testing::two_model_stream(a, b, 60, rng);
    MeasureOptions opts;
    opts.n_states = 5;
    WindowSpec spec;
    const auto trace = scan(s, spec, opts);
    for (const auto& r : trace.records) REQUIRE(r.c >= 0.0);

    // each event repeated twice keeps the histograms' shape and doubles the counts
    opts.model_class = ModelClass::multinomial;
    std::vector<State> doubled_past, doubled_future;
    for (std::size_t k = 0; k < 60; ++k) doubled_past.insert(doubled_past.end(), 2, s[k]);
    for (std::size_t k = 60; k < 120; ++k) doubled_future.insert(doubled_future.end(), 2, s[k]);
    auto doubled = EventStream::single_session(doubled_past);
    doubled.append(EventStream::single_session(doubled_future));
    const auto p1 = creativity_at(s, 60, spec, opts);
    const auto p2 = creativity_at(doubled, 120, spec, opts);
    REQUIRE(p2.c == doctest::Approx(2.0 * p1.c).epsilon(1e-12));
    REQUIRE(p2.nu == p1.nu);
  }
}

TEST_CASE("change point gives a larger measure than points inside either regime") {
  std::mt19937_64 gen(2);
  markov::Rng rng(314);
  const auto a = testing::random_chain(gen, 18);
  const auto b = testing::random_chain(gen, 18);
  const auto s = testing::two_model_stream(a, b, 300, rng);
  const auto spec = fixed_windows(50, 50);
  MeasureOptions opts;
  const double at_change = creativity_at(s, 300, spec, opts).c;
  CHECK(at_change > creativity_at(s, 50, spec, opts).c);
  CHECK(at_change > creativity_at(s, 550, spec, opts).c);
}

TEST_CASE("scan window arithmetic and errors") {
  const auto s = EventStream::single_session({0, 1, 0, 1, 0, 1, 1, 0, 0, 1});
  MeasureOptions opts;
  opts.n_states = 2;
  const auto trace = scan(s, fixed_windows(5, 5), opts);
  REQUIRE(trace.records.size() == 1);
  CHECK(trace.records[0].t == 5);
  CHECK_THROWS_AS(scan(s, fixed_windows(6, 5), opts), DomainError);
  CHECK_THROWS_AS(creativity_at(s, 0, WindowSpec{}, opts), DomainError);
}

TEST_CASE("eval predicate after finger lift") {
  const GridSpec grid;
  const auto s = split_sessions({0, 1, 2, 11, 3, 4, 5, 14, 6}, grid);
  WindowSpec spec;
  spec.eval_points = after_offscreen(grid);
  MeasureOptions opts;
  const auto trace = scan(s, spec, opts);
  REQUIRE(trace.records.size() == 2);
  CHECK(trace.records[0].t == 4);
  CHECK(trace.records[1].t == 8);
}

TEST_CASE("split-vs-future variant") {
  const auto s = EventStream::single_session({0, 0, 0, 0, 1, 1, 1, 1});
  WindowSpec spec;
  spec.variant = Variant::split_vs_future;
  MeasureOptions opts;
  opts.n_states = 2;
  CHECK_THROWS_AS(creativity_at(s, 4, spec, opts), DomainError);

  opts.fit.pseudocount = 0.5;
  for (auto mc : {ModelClass::markov, ModelClass::multinomial}) {
    opts.model_class = mc;
    const auto p = creativity_at(s, 4, spec, opts);
    CHECK_FALSE(p.infinite_evidence);
    CHECK(p.c > 0.0);
  }

  // multinomial oracle: ln q_past(0)^4 - ln q_future(0)^4 with q = (h + 0.5) / (4 + 1)
  opts.model_class = ModelClass::multinomial;
  const double expected = 4 * std::log(4.5 / 5.0) - 4 * std::log(0.5 / 5.0);
  CHECK(creativity_at(s, 4, spec, opts).c == doctest::Approx(expected).epsilon(1e-12));

  // a zero-probability cross-evaluation is reported, not propagated as -inf
  const auto h = creativity_from_histograms(Eigen::Vector2d(3, 1), Eigen::Vector2d(2, 0), Variant::split_vs_future,
                                            markov::FitOptions{0.0});
  CHECK(h.infinite_evidence);
}

TEST_CASE("degrees of freedom rules for the Markov class") {
  const GridSpec grid;
  const auto s = split_sessions({0, 1, 2, 11, 3, 4, 5, 14, 0, 1, 2, 5, 8, 7, 6, 3, 12}, grid);
  MeasureOptions opts;
  const auto pooled_counts = markov::count_window(s, 0, 8, 18) + markov::count_window(s, 8, 17, 18);
  CHECK(creativity_at(s, 8, WindowSpec{}, opts).nu == std::max(1, markov::free_parameters(pooled_counts)));

  opts.dof_rule = DofRule::split_difference;
  const int split = markov::free_parameters(markov::count_window(s, 0, 8, 18)) +
                    markov::free_parameters(markov::count_window(s, 8, 17, 18)) -
                    markov::free_parameters(pooled_counts);
  CHECK(creativity_at(s, 8, WindowSpec{}, opts).nu == std::max(1, split));
}

TEST_CASE("detect_peaks") {
  CHECK(detect_peaks(trace_of({0, 1, 2, 3, 4}), 0.0).empty());
  CHECK(detect_peaks(trace_of({4, 3, 2, 1}), 0.0).empty());

  const auto one = detect_peaks(trace_of({0, 1, 0}), 0.5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].t == 1);
  CHECK(one[0].c_scaled == 1.0);

  const auto plateau = detect_peaks(trace_of({0, 2, 2, 2, 1, 3, 0}), 0.0);
  REQUIRE(plateau.size() == 2);
  CHECK(plateau[0].t == 1);
  CHECK(plateau[1].t == 5);

  CHECK(detect_peaks(trace_of({0, 1, 1, 2}), 0.0).empty());
  CHECK(detect_peaks(trace_of({0, 1, 0}), 1.0).empty());
  CHECK_THROWS_AS(detect_peaks(trace_of({0, 1, 0}), -1.0), DomainError);
}

TEST_CASE("smooth") {
  const auto s = EventStream::single_session({0, 2, 1, 1, 0});
  const auto identity = smooth(s, {0.5, Kernel::box}, 3);
  for (std::size_t t = 0; t < s.size(); ++t) {
    for (int j = 0; j < 3; ++j) CHECK(identity(t, j) == (s[t] == j ? 1.0 : 0.0));
  }
  const auto tiny_exp = smooth(s, {0.01, Kernel::exponential}, 3);
  CHECK(tiny_exp == identity);

  const auto constant = smooth(EventStream::single_session({3, 3, 3, 3}), {2.5, Kernel::exponential}, 4);
  for (int t = 0; t < 4; ++t) CHECK(constant(t, 3) == doctest::Approx(1.0));

  const auto edge = smooth(EventStream::single_session({0, 1}), {2.0, Kernel::box}, 2);
  CHECK(edge(0, 0) == doctest::Approx(0.5));
  CHECK(edge(0, 1) == doctest::Approx(0.5));

  for (auto kernel : {Kernel::box, Kernel::exponential}) {
    const auto w = smooth(s, {3.0, kernel}, 3);
    CHECK((w.rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(smooth(s, {0.0, Kernel::box}, 3), DomainError);
}

TEST_CASE("multiscale_scan") {
  std::mt19937_64 gen(17);
  markov::Rng rng(17);
  const auto a = testing::random_chain(gen, 6);
  const auto b = testing::random_chain(gen, 6);
  const auto s = testing::two_model_stream(a, b, 150, rng);
  MeasureOptions opts;
  opts.model_class = ModelClass::multinomial;
  opts.n_states = 6;
  const auto spec = fixed_windows(40, 40);

  const double one[] = {1.0};
  const auto unit = multiscale_scan(s, spec, one, opts);
  const auto plain = scan(s, spec, opts);
  REQUIRE(unit.size() == 1);
  REQUIRE(unit[0].records.size() == plain.records.size());
  for (std::size_t i = 0; i < plain.records.size(); ++i) {
    REQUIRE(unit[0].records[i].t == plain.records[i].t);
    REQUIRE(unit[0].records[i].c == plain.records[i].c);
    REQUIRE(unit[0].records[i].nu == plain.records[i].nu);
  }

  const double three[] = {1.0, 2.0, 4.0};
  const auto traces = multiscale_scan(s, fixed_windows(20, 20), three, opts);
  REQUIRE(traces.size() == 3);
  CHECK(traces[0].sigma == 1.0);
  CHECK(traces[1].sigma == 2.0);
  CHECK(traces[2].sigma == 4.0);

  const double huge[] = {100.0};
  CHECK(multiscale_scan(s, spec, huge, opts)[0].records.empty());

  opts.model_class = ModelClass::markov;
  CHECK_THROWS_AS(multiscale_scan(s, spec, one, opts), DomainError);
}

TEST_CASE("multiscale peak stays put as sigma grows on an abrupt change") {
  // two disjoint alphabets: states 0-2 then states 3-5
  std::vector<State> states;
  std::mt19937_64 gen(5);
  for (int k = 0; k < 200; ++k) states.push_back(static_cast<State>(gen() % 3));
  for (int k = 0; k < 200; ++k) states.push_back(static_cast<State>(3 + gen() % 3));
  const auto s = EventStream::single_session(states);
  MeasureOptions opts;
  opts.model_class = ModelClass::multinomial;
  opts.n_states = 6;
  const double sigmas[] = {1.0, 2.0, 4.0, 8.0};
  const auto traces = multiscale_scan(s, fixed_windows(20, 20), sigmas, opts);
  for (const auto& trace : traces) {
    const auto peak = std::max_element(trace.records.begin(), trace.records.end(),
                                       [](const auto& x, const auto& y) { return x.c_scaled < y.c_scaled; });
    REQUIRE(peak != trace.records.end());
    const auto offset = static_cast<double>(peak->t) - 200.0;
    CHECK(std::abs(offset) <= trace.sigma);
  }
}

TEST_CASE("property: scans are deterministic") {
  std::mt19937_64 gen(9);
  markov::Rng rng(9);
  const auto a = testing::random_chain(gen, 18);
  const auto s = testing::two_model_stream(a, testing::random_chain(gen, 18), 100, rng);
  MeasureOptions opts;
  const auto x = scan(s, WindowSpec{}, opts);
  const auto y = scan(s, WindowSpec{}, opts);
  REQUIRE(x.records.size() == y.records.size());
  for (std::size_t i = 0; i < x.records.size(); ++i) {
    REQUIRE(x.records[i].c == y.records[i].c);
    REQUIRE(x.records[i].nu == y.records[i].nu);
  }
}
