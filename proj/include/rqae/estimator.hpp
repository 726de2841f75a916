#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqae/backend.hpp"
#include "rqae/interval.hpp"
#include "rqae/random.hpp"
#include "rqae/schedule.hpp"

namespace rqae {

// Full trace of one loop pass.
struct IterationRecord {
  int index = 0;  // 1-based
  double shift = 0.0;
  int amplification = 0;
  bool capped = false;  // amplification was clamped by the schedule cap
  std::int64_t shots = 0;
  std::int64_t hits = 0;
  double p_hat = 0.0;
  double p_min = 0.0;
  double p_max = 0.0;
  ConfidenceInterval interval;
  std::int64_t grover_calls_cum = 0;  // cumulative shots x Grover exponent
  std::int64_t base_calls_cum = 0;    // cumulative preparation-oracle calls, inverse included
};

struct RunResult {
  double estimate = 0.0;  // center of the final interval
  ConfidenceInterval interval;
  std::vector<IterationRecord> iterations;
  std::int64_t grover_calls = 0;
  std::int64_t base_calls = 0;
  bool converged = false;
};

struct AmplificationChoice {
  int amplification = 0;
  bool capped = false;
};

// Thrown when the loop outlives its scheduled iteration bound, which the
// parameter derivation rules out for a correct backend; carries the trace.
class IterationLimitError : public std::runtime_error {
 public:
  IterationLimitError(const std::string& message, RunResult partial)
      : std::runtime_error(message), partial_(std::move(partial)) {}
  const RunResult& partial_result() const { return partial_; }

 private:
  RunResult partial_;
};

// Amplitude interval reconstructed from the two oppositely shifted
// unamplified measurements (pure arithmetic, exposed for tests).
ConfidenceInterval first_interval(double p_sum, double p_diff, double shift,
                                  double prob_half_width);

// Measures the marked-state probability under +shift and -shift, with the
// scheduled shot count each, and combines them into a signed first interval.
IterationRecord first_iteration(const Schedule& schedule, const OracleBackend& backend,
                                RandomStream& rng);

// Next shift: moves the lower bound of the previous interval to zero.
double choose_shift(const ConfidenceInterval& previous);

// Largest Grover exponent that keeps the amplified interval inside the first
// quadrant, clamped by `cap`; `capped` reports whether the clamp acted.
AmplificationChoice choose_amplification(double half_width, int cap);

// Amplitude interval recovered from clamped probability bounds at the given
// amplification and shift.
ConfidenceInterval refine_interval(double p_min, double p_max, int amplification,
                                   double shift);

// Runs the full estimation loop until the interval half-width reaches the
// scheduled target. Sequential by nature; distinct runs are independent.
RunResult run(const Schedule& schedule, const OracleBackend& backend, RandomStream& rng);

}  // namespace rqae
