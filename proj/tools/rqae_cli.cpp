#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "rqae/backend.hpp"
#include "rqae/circuit.hpp"
#include "rqae/estimator.hpp"
#include "rqae/harness.hpp"
#include "rqae/theory.hpp"

namespace {

struct RunFlags {
  std::string config_path;
  std::vector<double> epsilon;
  std::vector<double> q;
  double gamma = 0.05;
  int reps = 100;
  double amplitude = 0.3;
  std::string amplitude_range;
  std::string backend = "analytic";
  int qubits = 5;
  std::uint64_t seed = 1;
  std::string out = "out";
  bool trace = false;
  bool allow_deep_circuit = false;
};

std::pair<double, double> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("--amplitude-range expects lo,hi");
  }
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
}

int do_run(const RunFlags& flags, const CLI::App& cmd) {
  rqae::ExperimentConfig cfg;
  if (cmd.count("--config")) cfg = rqae::load_config(flags.config_path);

  if (cmd.count("--epsilon")) cfg.epsilon_grid = flags.epsilon;
  if (cmd.count("--q")) cfg.q_grid = flags.q;
  if (cmd.count("--gamma")) cfg.gamma = flags.gamma;
  if (cmd.count("--reps")) cfg.repetitions = flags.reps;
  if (cmd.count("--amplitude")) cfg.amplitude = {flags.amplitude, flags.amplitude};
  if (cmd.count("--amplitude-range")) {
    const auto [lo, hi] = parse_range(flags.amplitude_range);
    cfg.amplitude = {lo, hi};
  }
  if (cmd.count("--backend")) cfg.backend = rqae::backend_from_string(flags.backend);
  if (cmd.count("--qubits")) cfg.qubits = flags.qubits;
  if (cmd.count("--seed")) cfg.seed = flags.seed;
  if (cmd.count("--out")) cfg.output_dir = flags.out;
  if (cmd.count("--trace")) cfg.trace = flags.trace;
  if (cmd.count("--allow-deep-circuit")) cfg.allow_deep_circuit = flags.allow_deep_circuit;

  try {
    const rqae::SweepSummary summary = rqae::run_sweep(cfg);
    rqae::emit_dat(summary, cfg.output_dir);
    if (cfg.trace) {
      for (const auto& run : summary.runs) {
        const auto& cell = summary.cells[run.cell];
        std::cout << "run cell=" << run.cell << " eps=" << cell.epsilon
                  << " q=" << cell.q << " rep=" << run.repetition
                  << " estimate=" << run.result.estimate
                  << " grover_calls=" << run.result.grover_calls
                  << " iterations=" << run.result.iterations.size() << '\n';
      }
    }
    for (const auto& cell : summary.cells) {
      std::cout << "cell q=" << cell.q << " eps=" << cell.epsilon
                << " mean_grover_calls=" << cell.grover_calls.mean
                << " bound=" << cell.oracle_call_bound
                << " failures=" << cell.containment_failures << "/" << cell.repetitions
                << '\n';
    }
    std::cout << "wrote " << cfg.output_dir << " (" << summary.total_runs << " runs, "
              << summary.total_failures << " containment failures)\n";
    return 0;
  } catch (const rqae::PropertyViolation& violation) {
    std::cerr << "property violation: " << violation.what() << '\n';
    const auto path = std::filesystem::path(cfg.output_dir) / "violation.json";
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (!ec) write_text(path, violation.trace_json());
    std::cerr << "offending trace: " << path.string() << '\n';
    return 2;
  }
}

int do_bounds(double q, double eps_min, double eps_max, int points, double gamma,
              const std::string& out_dir) {
  const std::string table = rqae::bounds_table(q, eps_min, eps_max, points, gamma);
  std::cout << table;
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir + ": " + ec.message());
  const auto path = std::filesystem::path(out_dir) /
                    ("bounds_q" + rqae::format_number(q) + ".dat");
  write_text(path, table);
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

int do_single(double epsilon, double q, double gamma, double amplitude,
              const std::string& backend_name, int qubits, std::uint64_t seed,
              bool trace) {
  const rqae::Schedule schedule = rqae::derive_schedule({q, epsilon, gamma});
  std::unique_ptr<rqae::OracleBackend> backend;
  if (rqae::backend_from_string(backend_name) == rqae::BackendKind::circuit) {
    backend = std::make_unique<rqae::CircuitBackend>(amplitude, qubits);
  } else {
    backend = std::make_unique<rqae::AnalyticBackend>(amplitude);
  }
  rqae::RandomStream rng = rqae::RandomStream::substream(seed, 0);
  const rqae::RunResult result = rqae::run(schedule, *backend, rng);

  const double scale = backend->amplitude_scale();
  std::cout << "estimate " << scale * result.estimate << " in ["
            << scale * result.interval.low << ", " << scale * result.interval.high
            << "]\n"
            << "iterations " << result.iterations.size() << ", last amplification "
            << result.iterations.back().amplification << '\n'
            << "grover_calls " << result.grover_calls << ", base_calls "
            << result.base_calls << '\n';
  if (scale != 1.0) {
    std::cout << "(estimation-space interval: [" << result.interval.low << ", "
              << result.interval.high << "], half-width target " << epsilon << ")\n";
  }
  if (trace) {
    std::cout << rqae::run_result_json(result) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign-recovering iterative quantum amplitude estimation toolkit"};
  app.require_subcommand(1);

  RunFlags rf;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a seeded experiment sweep");
  run_cmd->add_option("--config", rf.config_path, "Config file (JSON or key = value)")
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--epsilon", rf.epsilon, "Target precisions")->delimiter(',');
  run_cmd->add_option("--q", rf.q, "Amplification policies")->delimiter(',');
  run_cmd->add_option("--gamma", rf.gamma, "Failure probability");
  run_cmd->add_option("--reps", rf.reps, "Repetitions per cell");
  run_cmd->add_option("--amplitude", rf.amplitude, "Fixed encoded amplitude");
  run_cmd->add_option("--amplitude-range", rf.amplitude_range,
                      "Uniform amplitude range lo,hi");
  run_cmd->add_option("--backend", rf.backend, "analytic or circuit");
  run_cmd->add_option("--qubits", rf.qubits, "Circuit register size");
  run_cmd->add_option("--seed", rf.seed, "Master seed");
  run_cmd->add_option("--out", rf.out, "Output directory");
  run_cmd->add_flag("--trace", rf.trace, "Echo one line per run");
  run_cmd->add_flag("--allow-deep-circuit", rf.allow_deep_circuit,
                    "Lift the circuit-backend epsilon floor");

  double b_q = 2.0, b_eps_min = 1e-5, b_eps_max = 1e-2, b_gamma = 0.05;
  int b_points = 25;
  std::string b_out = "out";
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Tabulate the theoretical cost curves");
  bounds_cmd->add_option("--q", b_q, "Amplification policy");
  bounds_cmd->add_option("--epsilon-min", b_eps_min, "Smallest precision");
  bounds_cmd->add_option("--epsilon-max", b_eps_max, "Largest precision");
  bounds_cmd->add_option("--points", b_points, "Grid size (log-spaced)");
  bounds_cmd->add_option("--gamma", b_gamma, "Failure probability");
  bounds_cmd->add_option("--out", b_out, "Output directory");

  double s_eps = 1e-3, s_q = 2.0, s_gamma = 0.05, s_amp = 0.3;
  std::string s_backend = "analytic";
  int s_qubits = 5;
  std::uint64_t s_seed = 1;
  bool s_trace = false;
  CLI::App* single_cmd = app.add_subcommand("single", "Run one traced estimation");
  single_cmd->add_option("--epsilon", s_eps, "Target precision");
  single_cmd->add_option("--q", s_q, "Amplification policy");
  single_cmd->add_option("--gamma", s_gamma, "Failure probability");
  single_cmd->add_option("--amplitude", s_amp, "Encoded amplitude");
  single_cmd->add_option("--backend", s_backend, "analytic or circuit");
  single_cmd->add_option("--qubits", s_qubits, "Circuit register size");
  single_cmd->add_option("--seed", s_seed, "Seed");
  single_cmd->add_flag("--trace", s_trace, "Print the full JSON trace");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return do_run(rf, *run_cmd);
    if (bounds_cmd->parsed()) {
      return do_bounds(b_q, b_eps_min, b_eps_max, b_points, b_gamma, b_out);
    }
    return do_single(s_eps, s_q, s_gamma, s_amp, s_backend, s_qubits, s_seed, s_trace);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
