#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqae/estimator.hpp"
#include "rqae/schedule.hpp"

namespace rqae {

enum class BackendKind { analytic, circuit };

std::string to_string(BackendKind kind);
BackendKind backend_from_string(const std::string& name);

// Fixed amplitude when lo == hi, otherwise drawn uniformly per run.
struct AmplitudeSpec {
  double lo = 0.3;
  double hi = 0.3;
  bool is_fixed() const { return lo == hi; }
};

struct ExperimentConfig {
  std::vector<double> epsilon_grid{1e-3};
  std::vector<double> q_grid{2.0};
  double gamma = 0.05;
  int repetitions = 100;
  AmplitudeSpec amplitude{};
  BackendKind backend = BackendKind::analytic;
  int qubits = 5;  // circuit backend register size, auxiliary included
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  bool trace = false;               // echo one line per run while sweeping
  bool allow_deep_circuit = false;  // lift the circuit-backend precision floor
};

// Reads either JSON or `key = value` text with the CLI's option names.
ExperimentConfig load_config(const std::filesystem::path& path);

struct MetricStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct CellSummary {
  double epsilon = 0.0;
  double q = 0.0;
  int repetitions = 0;
  int containment_failures = 0;
  MetricStats grover_calls;
  MetricStats base_calls;
  MetricStats last_amplification;
  MetricStats iterations;
  // Theoretical overlays for this cell.
  double oracle_call_bound = 0.0;
  double iteration_bound = 0.0;
  int depth_cap = 0;
  std::int64_t shots_per_iteration = 0;
};

struct RunLogEntry {
  std::size_t cell = 0;
  int repetition = 0;
  std::uint64_t stream_index = 0;
  double encoded_amplitude = 0.0;  // amplitude handed to the backend
  double target_amplitude = 0.0;   // amplitude the estimator converges to
  RunResult result;
};

struct SweepSummary {
  ExperimentConfig config;
  std::vector<CellSummary> cells;  // q-major, epsilon-minor order
  std::vector<RunLogEntry> runs;
  int total_runs = 0;
  int total_failures = 0;
};

// A deterministic per-run guarantee failed; this falsifies the
// implementation or the backend, never the statistics.
class PropertyViolation : public std::runtime_error {
 public:
  PropertyViolation(const std::string& message, std::string trace_json)
      : std::runtime_error(message), trace_json_(std::move(trace_json)) {}
  const std::string& trace_json() const { return trace_json_; }

 private:
  std::string trace_json_;
};

// Checks the deterministic guarantees of one run: depth cap, iteration
// bound, growth of uncapped amplification pairs, call budget, convergence.
// Containment misses are statistical and are counted by the sweep instead.
void check_run_properties(const Schedule& schedule, double call_bound,
                          const RunResult& result);

// Executes repetitions x |epsilon_grid| x |q_grid| independent seeded runs.
// Aborts on the first property violation with the offending trace attached.
SweepSummary run_sweep(const ExperimentConfig& config);

// Writes one `x y y-min y-max` file per (q, metric) plus a JSON sidecar with
// the full config and per-run traces; byte-stable for equal config and seed.
void emit_dat(const SweepSummary& summary, const std::filesystem::path& dir);

// Log-spaced table of the theoretical quantities; returns the table text.
std::string bounds_table(double q, double epsilon_lo, double epsilon_hi, int points,
                         double gamma);

// Shortest round-trip decimal rendering used for all emitted numbers.
std::string format_number(double value);

std::string run_result_json(const RunResult& result);
std::string sweep_json(const SweepSummary& summary);
std::string config_json(const ExperimentConfig& config);

}  // namespace rqae
