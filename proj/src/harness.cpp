#include "rqae/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "rqae/backend.hpp"
#include "rqae/circuit.hpp"
#include "rqae/theory.hpp"

namespace rqae {

using nlohmann::json;

namespace {

constexpr double kCircuitEpsilonFloor = 1e-3;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw std::invalid_argument("config: not a boolean: " + text);
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "epsilon") {
    cfg.epsilon_grid = parse_double_list(value);
  } else if (key == "q") {
    cfg.q_grid = parse_double_list(value);
  } else if (key == "gamma") {
    cfg.gamma = std::stod(value);
  } else if (key == "reps" || key == "repetitions") {
    cfg.repetitions = std::stoi(value);
  } else if (key == "amplitude") {
    const double a = std::stod(value);
    cfg.amplitude = {a, a};
  } else if (key == "amplitude-range" || key == "amplitude_range") {
    const auto pair = parse_double_list(value);
    if (pair.size() != 2) {
      throw std::invalid_argument("config: amplitude-range needs two values");
    }
    cfg.amplitude = {pair[0], pair[1]};
  } else if (key == "backend") {
    cfg.backend = backend_from_string(trim(value));
  } else if (key == "qubits") {
    cfg.qubits = std::stoi(value);
  } else if (key == "seed") {
    cfg.seed = std::stoull(value);
  } else if (key == "out") {
    cfg.output_dir = trim(value);
  } else if (key == "trace") {
    cfg.trace = parse_bool(trim(value));
  } else if (key == "allow-deep-circuit" || key == "allow_deep_circuit") {
    cfg.allow_deep_circuit = parse_bool(trim(value));
  } else {
    throw std::invalid_argument("config: unknown key: " + key);
  }
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "epsilon" || key == "q") {
      auto& grid = (key == "epsilon") ? cfg.epsilon_grid : cfg.q_grid;
      grid.clear();
      if (value.is_array()) {
        for (const auto& v : value) grid.push_back(v.get<double>());
      } else {
        grid.push_back(value.get<double>());
      }
    } else if (key == "gamma") {
      cfg.gamma = value.get<double>();
    } else if (key == "reps" || key == "repetitions") {
      cfg.repetitions = value.get<int>();
    } else if (key == "amplitude") {
      const double a = value.get<double>();
      cfg.amplitude = {a, a};
    } else if (key == "amplitude-range" || key == "amplitude_range") {
      cfg.amplitude = {value.at(0).get<double>(), value.at(1).get<double>()};
    } else if (key == "backend") {
      cfg.backend = backend_from_string(value.get<std::string>());
    } else if (key == "qubits") {
      cfg.qubits = value.get<int>();
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "out") {
      cfg.output_dir = value.get<std::string>();
    } else if (key == "trace") {
      cfg.trace = value.get<bool>();
    } else if (key == "allow-deep-circuit" || key == "allow_deep_circuit") {
      cfg.allow_deep_circuit = value.get<bool>();
    } else {
      throw std::invalid_argument("config: unknown key: " + key);
    }
  }
  return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.epsilon_grid.empty() || cfg.q_grid.empty()) {
    throw std::invalid_argument("sweep: empty epsilon or q grid");
  }
  if (cfg.repetitions < 1) {
    throw std::invalid_argument("sweep: repetitions must be at least 1");
  }
  for (double q : cfg.q_grid) {
    for (double eps : cfg.epsilon_grid) {
      validate_schedule_inputs({q, eps, cfg.gamma});
    }
  }
  if (!(cfg.amplitude.lo <= cfg.amplitude.hi)) {
    throw std::invalid_argument("sweep: amplitude range is inverted");
  }
  if (std::abs(cfg.amplitude.lo) > 0.5 || std::abs(cfg.amplitude.hi) > 0.5) {
    throw std::invalid_argument("sweep: amplitudes must lie in [-1/2, 1/2]");
  }
  if (cfg.backend == BackendKind::circuit && !cfg.allow_deep_circuit) {
    const double min_eps =
        *std::min_element(cfg.epsilon_grid.begin(), cfg.epsilon_grid.end());
    if (min_eps < kCircuitEpsilonFloor) {
      throw std::invalid_argument(
          "sweep: circuit backend is limited to epsilon >= 1e-3 unless "
          "allow-deep-circuit is set");
    }
  }
}

std::unique_ptr<OracleBackend> make_backend(const ExperimentConfig& cfg,
                                            double amplitude) {
  if (cfg.backend == BackendKind::circuit) {
    return std::make_unique<CircuitBackend>(amplitude, cfg.qubits);
  }
  return std::make_unique<AnalyticBackend>(amplitude);
}

struct Accumulator {
  double sum = 0.0;
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  void add(double v) {
    if (count == 0) {
      min = max = v;
    } else {
      min = std::min(min, v);
      max = std::max(max, v);
    }
    sum += v;
    ++count;
  }

  MetricStats stats() const { return {sum / count, min, max}; }
};

json interval_to_json(const ConfidenceInterval& iv) {
  return json{{"low", iv.low}, {"high", iv.high}};
}

json record_to_json(const IterationRecord& r) {
  return json{{"index", r.index},
              {"shift", r.shift},
              {"amplification", r.amplification},
              {"capped", r.capped},
              {"shots", r.shots},
              {"hits", r.hits},
              {"p_hat", r.p_hat},
              {"p_min", r.p_min},
              {"p_max", r.p_max},
              {"interval", interval_to_json(r.interval)},
              {"grover_calls_cum", r.grover_calls_cum},
              {"base_calls_cum", r.base_calls_cum}};
}

json result_to_json(const RunResult& result) {
  json iterations = json::array();
  for (const auto& rec : result.iterations) iterations.push_back(record_to_json(rec));
  return json{{"estimate", result.estimate},
              {"interval", interval_to_json(result.interval)},
              {"converged", result.converged},
              {"grover_calls", result.grover_calls},
              {"base_calls", result.base_calls},
              {"iterations", std::move(iterations)}};
}

json stats_to_json(const MetricStats& s) {
  return json{{"mean", s.mean}, {"min", s.min}, {"max", s.max}};
}

json cell_to_json(const CellSummary& c) {
  return json{{"epsilon", c.epsilon},
              {"q", c.q},
              {"repetitions", c.repetitions},
              {"containment_failures", c.containment_failures},
              {"grover_calls", stats_to_json(c.grover_calls)},
              {"base_calls", stats_to_json(c.base_calls)},
              {"last_amplification", stats_to_json(c.last_amplification)},
              {"iterations", stats_to_json(c.iterations)},
              {"oracle_call_bound", c.oracle_call_bound},
              {"iteration_bound", c.iteration_bound},
              {"depth_cap", c.depth_cap},
              {"shots_per_iteration", c.shots_per_iteration}};
}

json config_to_json(const ExperimentConfig& cfg) {
  json j{{"epsilon", cfg.epsilon_grid},
         {"q", cfg.q_grid},
         {"gamma", cfg.gamma},
         {"reps", cfg.repetitions},
         {"backend", to_string(cfg.backend)},
         {"qubits", cfg.qubits},
         {"seed", cfg.seed},
         {"out", cfg.output_dir},
         {"trace", cfg.trace},
         {"allow-deep-circuit", cfg.allow_deep_circuit}};
  if (cfg.amplitude.is_fixed()) {
    j["amplitude"] = cfg.amplitude.lo;
  } else {
    j["amplitude-range"] = {cfg.amplitude.lo, cfg.amplitude.hi};
  }
  return j;
}

std::string violation_trace(const ExperimentConfig& cfg, const RunLogEntry& entry) {
  json j{{"config", config_to_json(cfg)},
         {"cell", entry.cell},
         {"repetition", entry.repetition},
         {"stream_index", entry.stream_index},
         {"encoded_amplitude", entry.encoded_amplitude},
         {"target_amplitude", entry.target_amplitude},
         {"result", result_to_json(entry.result)}};
  return j.dump(2);
}

std::string dat_name(double q, const std::string& metric) {
  std::ostringstream name;
  name << "q" << format_number(q) << "_" << metric << ".dat";
  return name.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace

std::string to_string(BackendKind kind) {
  return kind == BackendKind::circuit ? "circuit" : "analytic";
}

BackendKind backend_from_string(const std::string& name) {
  if (name == "analytic") return BackendKind::analytic;
  if (name == "circuit") return BackendKind::circuit;
  throw std::invalid_argument("unknown backend: " + name);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config: " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return config_from_json(json::parse(text));
  }

  // key = value lines; '#' starts a comment.
  ExperimentConfig cfg;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto sep = line.find('=');
    if (sep == std::string::npos) sep = line.find_first_of(" \t");
    if (sep == std::string::npos) {
      throw std::invalid_argument("config: malformed line: " + line);
    }
    apply_config_entry(cfg, trim(line.substr(0, sep)), trim(line.substr(sep + 1)));
  }
  return cfg;
}

void check_run_properties(const Schedule& schedule, double call_bound,
                          const RunResult& result) {
  if (!result.converged) {
    throw std::logic_error("run property: result not converged");
  }
  const double q = schedule.inputs.q;
  for (const auto& rec : result.iterations) {
    if (rec.amplification > schedule.max_amplification) {
      throw std::logic_error("run property: amplification exceeds the schedule cap");
    }
  }
  if (!(static_cast<double>(result.iterations.size()) < schedule.iteration_bound)) {
    throw std::logic_error("run property: iteration count reached the bound");
  }
  for (std::size_t i = 0; i + 1 < result.iterations.size(); ++i) {
    const auto& a = result.iterations[i];
    const auto& b = result.iterations[i + 1];
    if (a.capped || b.capped) continue;
    const double ratio = (2.0 * b.amplification + 1.0) / (2.0 * a.amplification + 1.0);
    if (ratio < q - 1e-9) {
      throw std::logic_error("run property: uncapped amplification pair grew slower than q");
    }
  }
  if (!(static_cast<double>(result.grover_calls) < call_bound)) {
    throw std::logic_error("run property: Grover-call total reached the closed-form bound");
  }
}

SweepSummary run_sweep(const ExperimentConfig& config) {
  validate_config(config);

  SweepSummary summary;
  summary.config = config;

  std::size_t cell_index = 0;
  for (double q : config.q_grid) {
    for (double eps : config.epsilon_grid) {
      const Schedule schedule = derive_schedule({q, eps, config.gamma});
      const double call_bound = oracle_call_bound(q, eps, config.gamma);

      CellSummary cell;
      cell.epsilon = eps;
      cell.q = q;
      cell.repetitions = config.repetitions;
      cell.oracle_call_bound = call_bound;
      cell.iteration_bound = schedule.iteration_bound;
      cell.depth_cap = schedule.max_amplification;
      cell.shots_per_iteration = schedule.shots_per_iteration;

      Accumulator grover, base, last_amp, iters;
      for (int rep = 0; rep < config.repetitions; ++rep) {
        const std::uint64_t stream_index =
            static_cast<std::uint64_t>(cell_index) * config.repetitions + rep;
        RandomStream rng = RandomStream::substream(config.seed, stream_index);
        const double amplitude = config.amplitude.is_fixed()
                                     ? config.amplitude.lo
                                     : rng.next_range(config.amplitude.lo,
                                                      config.amplitude.hi);
        const auto backend = make_backend(config, amplitude);

        RunLogEntry entry;
        entry.cell = cell_index;
        entry.repetition = rep;
        entry.stream_index = stream_index;
        entry.encoded_amplitude = amplitude;
        entry.target_amplitude = backend->effective_amplitude();
        entry.result = rqae::run(schedule, *backend, rng);

        try {
          check_run_properties(schedule, call_bound, entry.result);
        } catch (const std::logic_error& err) {
          throw PropertyViolation(err.what(), violation_trace(config, entry));
        }

        if (!entry.result.interval.contains(entry.target_amplitude)) {
          ++cell.containment_failures;
          ++summary.total_failures;
        }
        grover.add(static_cast<double>(entry.result.grover_calls));
        base.add(static_cast<double>(entry.result.base_calls));
        last_amp.add(static_cast<double>(entry.result.iterations.back().amplification));
        iters.add(static_cast<double>(entry.result.iterations.size()));
        ++summary.total_runs;
        summary.runs.push_back(std::move(entry));
      }
      cell.grover_calls = grover.stats();
      cell.base_calls = base.stats();
      cell.last_amplification = last_amp.stats();
      cell.iterations = iters.stats();
      summary.cells.push_back(cell);
      ++cell_index;
    }
  }
  return summary;
}

std::string format_number(double value) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("number formatting failed");
  }
  return std::string(buf.data(), ptr);
}

void emit_dat(const SweepSummary& summary, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                             ec.message());
  }

  const auto& cfg = summary.config;
  const std::size_t n_eps = cfg.epsilon_grid.size();
  const auto metric_of = [](const CellSummary& c, const std::string& name) {
    if (name == "oracle_calls") return c.grover_calls;
    if (name == "base_oracle_calls") return c.base_calls;
    if (name == "k") return c.last_amplification;
    return c.iterations;  // "I"
  };

  for (std::size_t qi = 0; qi < cfg.q_grid.size(); ++qi) {
    for (const std::string metric : {"oracle_calls", "base_oracle_calls", "k", "I"}) {
      std::ostringstream body;
      body << "x y y-min y-max\n";
      for (std::size_t ei = 0; ei < n_eps; ++ei) {
        const CellSummary& cell = summary.cells[qi * n_eps + ei];
        const MetricStats s = metric_of(cell, metric);
        body << format_number(cell.epsilon) << ' ' << format_number(s.mean) << ' '
             << format_number(s.mean - s.min) << ' ' << format_number(s.max - s.mean)
             << '\n';
      }
      write_file(dir / dat_name(cfg.q_grid[qi], metric), body.str());
    }
  }
  write_file(dir / "sweep.json", sweep_json(summary));
}

std::string bounds_table(double q, double epsilon_lo, double epsilon_hi, int points,
                         double gamma) {
  if (!(epsilon_lo > 0.0 && epsilon_lo <= epsilon_hi)) {
    throw std::invalid_argument("bounds table: bad epsilon range");
  }
  if (points < 1) {
    throw std::invalid_argument("bounds table: need at least one point");
  }
  std::ostringstream out;
  out << "epsilon k_max T oracle_bound classical quadratic iqae\n";
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    const double eps =
        i == 0 ? epsilon_lo
               : (i == points - 1
                      ? epsilon_hi
                      : std::exp(std::log(epsilon_lo) +
                                 t * (std::log(epsilon_hi) - std::log(epsilon_lo))));
    const BoundReport r = bound_report(q, eps, gamma);
    out << format_number(eps) << ' ' << r.depth_cap << ' '
        << format_number(r.iteration_bound) << ' ' << format_number(r.oracle_call_bound)
        << ' ' << format_number(r.classical_cost) << ' ' << format_number(r.quadratic_cost)
        << ' ' << format_number(r.iqae_reference) << '\n';
  }
  return out.str();
}

std::string run_result_json(const RunResult& result) {
  return result_to_json(result).dump(2);
}

std::string config_json(const ExperimentConfig& config) {
  return config_to_json(config).dump(2);
}

std::string sweep_json(const SweepSummary& summary) {
  json cells = json::array();
  for (const auto& c : summary.cells) cells.push_back(cell_to_json(c));
  json runs = json::array();
  for (const auto& r : summary.runs) {
    runs.push_back(json{{"cell", r.cell},
                        {"repetition", r.repetition},
                        {"stream_index", r.stream_index},
                        {"encoded_amplitude", r.encoded_amplitude},
                        {"target_amplitude", r.target_amplitude},
                        {"result", result_to_json(r.result)}});
  }
  json j{{"config", config_to_json(summary.config)},
         {"cells", std::move(cells)},
         {"runs", std::move(runs)},
         {"total_runs", summary.total_runs},
         {"total_failures", summary.total_failures}};
  return j.dump(2);
}

}  // namespace rqae
