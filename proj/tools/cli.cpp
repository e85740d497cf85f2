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

#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "creadet/creativity.hpp"
#include "creadet/csv.hpp"
#include "creadet/error.hpp"
#include "creadet/ingest.hpp"
#include "creadet/markov.hpp"
#include "creadet/serialize.hpp"
#include "creadet/simulator.hpp"
#include "creadet/stats.hpp"

namespace creadet::cli {
namespace {

struct Globals {
  std::uint64_t seed = 42;
  std::string log_level = "info";
  std::string output = "-";
};

struct GtestArgs {
  std::string r_path;
  std::string s_path;
};

struct SimulateArgs {
  std::string schedule = "paper";
  double epsilon = 0.0;
  std::string styles;
};

struct ScanArgs {
  std::string input;
  std::string model = "markov";
  std::string variant = "pooled";
  std::string kappa = "all";
  std::string tau = "all";
  std::string eval = "all";
  std::vector<double> sigmas;
  double pseudocount = 0.0;
  std::string dof = "pooled";
  std::string kernel = "box";
  int n_states = 18;
  std::size_t min_window = 1;
};

struct FitArgs {
  std::string input;
  int n_states = 18;
  double pseudocount = 0.0;
};

struct Figure2Args {
  std::string out_dir = ".";
  std::string styles;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

creativity::WindowLength parse_window(const std::string& text, const char* flag) {
  if (text == "all") return creativity::WindowLength::all();
  std::size_t n = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), n);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || n == 0) {
    throw UsageError(std::string(flag) + " must be a positive integer or 'all', got '" + text + "'");
  }
  return creativity::WindowLength::fixed(n);
}

simulator::StyleCatalog load_catalog(const std::string& path) {
  if (path.empty()) return simulator::default_catalog();
  return io::catalog_from_json(io::read_json(path));
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err, const std::string& level) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
  auto logger = std::make_shared<spdlog::logger>("creadet", sink);
  logger->set_pattern("[%l] %v");
  const auto parsed = spdlog::level::from_str(level);
  if (parsed == spdlog::level::off && level != "off") throw UsageError("unknown log level '" + level + "'");
  logger->set_level(parsed);
  return logger;
}

int cmd_gtest(const GtestArgs& a, std::ostream& out, spdlog::logger& log) {
  Eigen::VectorXd r = io::read_histogram_csv(a.r_path);
  Eigen::VectorXd s = io::read_histogram_csv(a.s_path);
  const Eigen::Index n = std::max(r.size(), s.size());
  r.conservativeResizeLike(Eigen::VectorXd::Zero(n));
  s.conservativeResizeLike(Eigen::VectorXd::Zero(n));
  log.info("gtest: {} bins, R={}, S={}", n, r.sum(), s.sum());

  const double L = stats::two_way_L(r, s);
  const double G = stats::g_two_way(r, s);
  const double chi2 = stats::chi2_two_way(r, s);
  const auto result = stats::decide(G, stats::degrees_of_freedom(r, s), stats::TestKind::g);
  out << "statistic_L,statistic_G,chi2,df,p_value,reject\n"
      << io::format_double(L) << ',' << io::format_double(G) << ',' << io::format_double(chi2) << ',' << result.df
      << ',' << io::format_double(result.p_value) << ',' << (result.reject_null ? "true" : "false") << '\n';
  return result.reject_null ? kExitReject : kExitOk;
}

int cmd_simulate(const SimulateArgs& a, const Globals& g, std::ostream& out, spdlog::logger& log) {
  if (!(a.epsilon >= 0)) throw UsageError("--epsilon must be >= 0");
  const auto schedule = a.schedule == "paper" ? simulator::canonical_schedule(a.epsilon, g.seed)
                                              : io::schedule_from_json(io::read_json(a.schedule), a.epsilon, g.seed);
  log.info("simulate: {} blocks, epsilon={}, seed={}", schedule.blocks.size(), schedule.epsilon, schedule.seed);
  const auto stream = simulator::run_schedule(schedule, load_catalog(a.styles));
  ingest::write_state_csv(out, stream);
  return kExitOk;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, spdlog::logger& log) {
  creativity::WindowSpec spec;
  spec.kappa = parse_window(a.kappa, "--kappa");
  spec.tau = parse_window(a.tau, "--tau");
  spec.variant = a.variant == "future" ? creativity::Variant::split_vs_future : creativity::Variant::split_vs_pooled;
  spec.min_window = a.min_window;
  const GridSpec grid;
  if (a.eval == "offscreen") spec.eval_points = creativity::after_offscreen(grid);

  creativity::MeasureOptions opts;
  opts.model_class = a.model == "multinomial" ? creativity::ModelClass::multinomial : creativity::ModelClass::markov;
  opts.fit.pseudocount = a.pseudocount;
  opts.n_states = a.n_states;
  opts.dof_rule = a.dof == "split" ? creativity::DofRule::split_difference : creativity::DofRule::pooled_support;

  if (!(a.pseudocount >= 0)) throw UsageError("--pseudocount must be >= 0");
  if (spec.variant == creativity::Variant::split_vs_future && !(a.pseudocount > 0)) {
    throw UsageError("--variant future needs --pseudocount > 0");
  }
  if (a.min_window < 1) throw UsageError("--min-window must be >= 1");
  const bool multiscale = !a.sigmas.empty();
  if (multiscale && opts.model_class == creativity::ModelClass::markov) {
    throw UsageError("--sigma needs --model multinomial");
  }

  const auto stream = ingest::read_state_csv(a.input, grid);
  log.info("scan: {} events, {} sessions, model={}, variant={}", stream.size(), stream.session_count(), a.model,
           a.variant);
  io::write_trace_header(out);
  if (!multiscale) {
    io::write_trace_rows(out, creativity::scan(stream, spec, opts));
    return kExitOk;
  }
  const auto kernel = a.kernel == "exponential" ? creativity::Kernel::exponential : creativity::Kernel::box;
  for (const auto& trace : creativity::multiscale_scan(stream, spec, a.sigmas, opts, kernel)) {
    if (trace.records.empty()) log.warn("scan: sigma={} admits no split point", trace.sigma);
    io::write_trace_rows(out, trace);
  }
  return kExitOk;
}

int cmd_fit(const FitArgs& a, std::ostream& out, spdlog::logger& log) {
  if (!(a.pseudocount >= 0)) throw UsageError("--pseudocount must be >= 0");
  const auto stream = ingest::read_state_csv(a.input);
  const auto model = markov::fit(stream, a.n_states, markov::FitOptions{a.pseudocount});
  log.info("fit: {} events, {} free parameters", stream.size(), markov::free_parameters(stream, a.n_states));
  out << io::model_to_json(model).dump(2) << '\n';
  return kExitOk;
}

int cmd_ingest(const std::string& input, std::ostream& out, spdlog::logger& log) {
  const auto events = ingest::read_touch_csv(std::filesystem::path(input));
  const auto stream = ingest::quantize(events);
  log.info("ingest: {} touch samples -> {} events in {} sessions", events.size(), stream.size(),
           stream.session_count());
  ingest::write_state_csv(out, stream);
  return kExitOk;
}

int cmd_figure2(const Figure2Args& a, const Globals& g, std::ostream& out, spdlog::logger& log) {
  const std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  const auto runs = simulator::figure2_experiment(simulator::figure2_epsilons(), g.seed, load_catalog(a.styles));
  out << "epsilon,peak_t,peak_c_scaled,peak_nu,peak_to_median,file\n";
  for (const auto& run : runs) {
    const auto name = "figure2_eps" + shortest(run.epsilon) + ".csv";
    std::ofstream file(dir / name);
    if (!file) throw std::runtime_error("cannot write '" + (dir / name).string() + "'");
    io::write_trace_csv(file, run.trace);
    const auto& peak = simulator::peak_record(run.trace);
    out << shortest(run.epsilon) << ',' << peak.t << ',' << io::format_double(peak.c_scaled) << ','
        << peak.nu << ',' << io::format_double(simulator::peak_to_median_ratio(run.trace)) << ',' << name << '\n';
    log.info("figure2: epsilon={} peak t={} c/nu={}", run.epsilon, peak.t, peak.c_scaled);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Likelihood-ratio creativity and change detection for event streams", "creadet"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--log", g.log_level, "Log level (trace, debug, info, warn, error, off)")
      ->envname("CREADET_LOG")
      ->capture_default_str();
  app.add_option("--output", g.output, "Primary output file, or - for standard output")->capture_default_str();

  GtestArgs gtest;
  auto* gtest_cmd = app.add_subcommand("gtest", "Two-way G-test on histogram CSVs (bin,count)");
  gtest_cmd->add_option("R", gtest.r_path, "First histogram")->required();
  gtest_cmd->add_option("S", gtest.s_path, "Second histogram")->required();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Sample a stream from a style schedule");
  sim_cmd->add_option("--schedule", sim.schedule, "Schedule JSON file, or 'paper' for the canonical 8x300 schedule")
      ->capture_default_str();
  sim_cmd->add_option("--epsilon", sim.epsilon, "Noise added to every transition probability")->capture_default_str();
  sim_cmd->add_option("--styles", sim.styles, "Style catalog JSON (defaults to the built-in styles)");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Creativity trace of a state CSV");
  scan_cmd->add_option("--input", scan.input, "State CSV (time,state)")->required();
  scan_cmd->add_option("--model", scan.model, "Model class")
      ->check(CLI::IsMember({"markov", "multinomial"}))
      ->capture_default_str();
  scan_cmd->add_option("--variant", scan.variant, "pooled: split vs pooled; future: split vs future")
      ->check(CLI::IsMember({"pooled", "future"}))
      ->capture_default_str();
  scan_cmd->add_option("--kappa", scan.kappa, "Past window length (integer or 'all')")->capture_default_str();
  scan_cmd->add_option("--tau", scan.tau, "Future window length (integer or 'all')")->capture_default_str();
  scan_cmd->add_option("--eval", scan.eval, "Evaluation points")
      ->check(CLI::IsMember({"all", "offscreen"}))
      ->capture_default_str();
  scan_cmd->add_option("--sigma", scan.sigmas, "Smoothing scales for a multiscale scan (multinomial only)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--pseudocount", scan.pseudocount, "Additive smoothing of fitted models")
      ->capture_default_str();
  scan_cmd->add_option("--dof", scan.dof, "Degrees of freedom rule for the Markov class")
      ->check(CLI::IsMember({"pooled", "split"}))
      ->capture_default_str();
  scan_cmd->add_option("--kernel", scan.kernel, "Smoothing kernel for --sigma")
      ->check(CLI::IsMember({"box", "exponential"}))
      ->capture_default_str();
  scan_cmd->add_option("--n-states", scan.n_states, "State space size")->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--min-window", scan.min_window, "Smallest admissible window")->capture_default_str();

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Maximum likelihood Markov model of a state CSV, as JSON");
  fit_cmd->add_option("--input", fit.input, "State CSV (time,state)")->required();
  fit_cmd->add_option("--n-states", fit.n_states, "State space size")->check(CLI::PositiveNumber)->capture_default_str();
  fit_cmd->add_option("--pseudocount", fit.pseudocount, "Additive smoothing")->capture_default_str();

  std::string ingest_input;
  auto* ingest_cmd = app.add_subcommand("ingest", "Quantize a touch CSV (time,x,y,down) into a state CSV");
  ingest_cmd->add_option("--input", ingest_input, "Touch CSV")->required();

  Figure2Args fig;
  auto* fig_cmd = app.add_subcommand("figure2", "Run the four-noise-level simulation experiment");
  fig_cmd->add_option("--out-dir", fig.out_dir, "Directory for the figure2_eps<epsilon>.csv traces")
      ->capture_default_str();
  fig_cmd->add_option("--styles", fig.styles, "Style catalog JSON (defaults to the built-in styles)");

  auto* dump_cmd = app.add_subcommand("dump-styles", "Print the built-in style catalog as JSON");
  for (auto* sub : app.get_subcommands({})) {
    sub->footer("Global options --seed, --log and --output may follow the subcommand; see creadet --help.");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    auto log = make_logger(err, g.log_level);
    log->info("seed={}", g.seed);

    std::ofstream file;
    std::ostringstream buffer;
    std::ostream& os = g.output == "-" ? out : static_cast<std::ostream&>(buffer);

    int code = kExitOk;
    if (gtest_cmd->parsed()) {
      code = cmd_gtest(gtest, os, *log);
    } else if (sim_cmd->parsed()) {
      code = cmd_simulate(sim, g, os, *log);
    } else if (scan_cmd->parsed()) {
      code = cmd_scan(scan, os, *log);
    } else if (fit_cmd->parsed()) {
      code = cmd_fit(fit, os, *log);
    } else if (ingest_cmd->parsed()) {
      code = cmd_ingest(ingest_input, os, *log);
    } else if (fig_cmd->parsed()) {
      code = cmd_figure2(fig, g, os, *log);
    } else if (dump_cmd->parsed()) {
      os << io::catalog_to_json(simulator::default_catalog()).dump(2) << '\n';
    }

    if (g.output != "-") {
      file.open(g.output);
      if (!file) throw std::runtime_error("cannot write '" + g.output + "'");
      file << buffer.str();
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace creadet::cli
