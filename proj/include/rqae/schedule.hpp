#pragma once

#include <cstdint>

namespace rqae {

struct ScheduleInputs {
  double q;        // minimum growth ratio between consecutive amplification factors, > 1
  double epsilon;  // target half-width of the final amplitude interval, in (0, 1/2)
  double gamma;    // admissible overall failure probability, in (0, 1)
};

// Rejects inputs outside the ranges above, and pairs whose iteration bound
// does not exceed one (the loop assumes at least one amplified iteration).
void validate_schedule_inputs(const ScheduleInputs& inputs);

// Closed forms shared with the theory module, so the two cannot drift.
double prob_half_width_target(double q);           // per-iteration probability half-width
double first_shift_value(double q);                // shift used by the unamplified iteration
double iteration_bound(double q, double epsilon);  // real-valued cap on the iteration count
int amplification_cap(double q, double epsilon);   // largest admissible Grover exponent

// Static per-run parameter set, frozen before the first measurement.
struct Schedule {
  ScheduleInputs inputs{};
  double prob_half_width = 0.0;           // planned half-width of each probability estimate
  double realized_prob_half_width = 0.0;  // half-width delivered by the rounded shot count
  double iteration_bound = 0.0;
  double iteration_failure_prob = 0.0;    // per-iteration share of the failure budget
  std::int64_t shots_per_iteration = 0;
  double first_shift = 0.0;
  int max_amplification = 0;
};

// Deterministic: identical inputs produce bit-identical schedules.
Schedule derive_schedule(const ScheduleInputs& inputs);

}  // namespace rqae
