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

#include <Eigen/Core>
#include <json.hpp>

#include "creadet/creativity.hpp"
#include "creadet/markov.hpp"
#include "creadet/simulator.hpp"

namespace creadet::io {

/// Histogram CSV: header `bin,count`, one row per bin. Bins not listed are
/// zero; the vector is as long as the largest bin index + 1.
Eigen::VectorXd read_histogram_csv(std::istream& in);
Eigen::VectorXd read_histogram_csv(const std::filesystem::path& path);
void write_histogram_csv(std::ostream& out, const Eigen::VectorXd& counts);

/// {"n_states": N, "pi": [...], "theta": [[...], ...]}; unobserved rows are
/// written as zeros and read back flagged.
nlohmann::json model_to_json(const markov::MarkovModel& model);
markov::MarkovModel model_from_json(const nlohmann::json& doc);

/// Object mapping style name to a model document.
nlohmann::json catalog_to_json(const simulator::StyleCatalog& catalog);
simulator::StyleCatalog catalog_from_json(const nlohmann::json& doc);

/// {"blocks": [{"style": "linear", "length": 300}, ...], "epsilon": e, "seed": s};
/// epsilon and seed are optional and default to the arguments.
simulator::Schedule schedule_from_json(const nlohmann::json& doc, double default_epsilon,
                                       std::uint64_t default_seed);

nlohmann::json read_json(const std::filesystem::path& path);

/// Trace CSV rows `t,c,nu,c_scaled,sigma,variant`. Infinite-evidence
/// records print `inf` for c and c_scaled.
void write_trace_header(std::ostream& out);
void write_trace_rows(std::ostream& out, const creativity::CreativityTrace& trace);
void write_trace_csv(std::ostream& out, const creativity::CreativityTrace& trace);

}  // namespace creadet::io
