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

#include "creadet/serialize.hpp"

#include <fstream>
#include <string>

#include "creadet/csv.hpp"
#include "creadet/error.hpp"

namespace creadet::io {

Eigen::VectorXd read_histogram_csv(std::istream& in) {
  CsvReader reader(in, {"bin", "count"});
  const std::size_t c_bin = reader.column("bin");
  const std::size_t c_count = reader.column("count");
  std::vector<std::pair<long long, double>> rows;
  long long max_bin = -1;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    const long long bin = reader.parse_integer(f[c_bin], "bin");
    const double count = reader.parse_double(f[c_count], "count");
    if (bin < 0) throw ParseError("bin index must be >= 0", reader.row());
    if (!(count >= 0) || !std::isfinite(count)) throw ParseError("count must be finite and >= 0", reader.row());
    max_bin = std::max(max_bin, bin);
    rows.emplace_back(bin, count);
  }
  if (rows.empty()) throw EmptyInputError("empty input: no histogram rows");
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(max_bin + 1);
  for (const auto& [bin, count] : rows) counts(bin) += count;
  return counts;
}

Eigen::VectorXd read_histogram_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_histogram_csv(in);
}

void write_histogram_csv(std::ostream& out, const Eigen::VectorXd& counts) {
  out << "bin,count\n";
  for (Eigen::Index i = 0; i < counts.size(); ++i) out << i << ',' << format_double(counts(i)) << '\n';
}

nlohmann::json model_to_json(const markov::MarkovModel& model) {
  const int n = model.n_states();
  nlohmann::json doc;
  doc["n_states"] = n;
  doc["pi"] = std::vector<double>(model.pi().data(), model.pi().data() + n);
  auto theta = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = model.theta()(i, j);
    theta.push_back(row);
  }
  doc["theta"] = std::move(theta);
  return doc;
}

markov::MarkovModel model_from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n_states").get<int>();
    if (n < 1) throw DomainError("model: n_states must be >= 1");
    const auto pi = doc.at("pi").get<std::vector<double>>();
    const auto theta = doc.at("theta").get<std::vector<std::vector<double>>>();
    if (pi.size() != static_cast<std::size_t>(n) || theta.size() != static_cast<std::size_t>(n)) {
      throw DomainError("model: pi/theta size does not match n_states");
    }
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(pi.data(), n);
    Eigen::MatrixXd t(n, n);
    for (int i = 0; i < n; ++i) {
      if (theta[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n)) {
        throw DomainError("model: theta row " + std::to_string(i) + " has the wrong length");
      }
      for (int j = 0; j < n; ++j) t(i, j) = theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return markov::MarkovModel(std::move(p), std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("model: malformed document: ") + e.what());
  }
}

nlohmann::json catalog_to_json(const simulator::StyleCatalog& catalog) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [name, model] : catalog) doc[name] = model_to_json(model);
  return doc;
}

simulator::StyleCatalog catalog_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw DomainError("style catalog must be a JSON object");
  simulator::StyleCatalog catalog;
  for (const auto& [name, model] : doc.items()) catalog.emplace(name, model_from_json(model));
  return catalog;
}

simulator::Schedule schedule_from_json(const nlohmann::json& doc, double default_epsilon,
                                       std::uint64_t default_seed) {
  try {
    simulator::Schedule s;
    s.epsilon = doc.value("epsilon", default_epsilon);
    s.seed = doc.value("seed", default_seed);
    for (const auto& b : doc.at("blocks")) {
      const auto length = b.at("length").get<long long>();
      if (length < 1) throw DomainError("schedule: block lengths must be >= 1");
      s.blocks.push_back({b.at("style").get<std::string>(), static_cast<std::size_t>(length)});
    }
    if (s.blocks.empty()) throw DomainError("schedule: no blocks");
    if (!(s.epsilon >= 0)) throw DomainError("schedule: epsilon must be >= 0");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("schedule: malformed document: ") + e.what());
  }
}

nlohmann::json read_json(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what(), 0);
  }
}

void write_trace_header(std::ostream& out) { out << "t,c,nu,c_scaled,sigma,variant\n"; }

void write_trace_rows(std::ostream& out, const creativity::CreativityTrace& trace) {
  const std::string sigma = format_double(trace.sigma);
  const std::string_view variant = creativity::to_string(trace.variant);
  for (const auto& r : trace.records) {
    out << r.t << ',';
    if (r.infinite_evidence) {
      out << "inf," << r.nu << ",inf,";
    } else {
      out << format_double(r.c) << ',' << r.nu << ',' << format_double(r.c_scaled) << ',';
    }
    out << sigma << ',' << variant << '\n';
  }
}

void write_trace_csv(std::ostream& out, const creativity::CreativityTrace& trace) {
  write_trace_header(out);
  write_trace_rows(out, trace);
}

}  // namespace creadet::io
