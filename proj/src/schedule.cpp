#include "rqae/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rqae {

namespace {

constexpr double kPi = std::numbers::pi;

// Angle whose sine is sqrt(2 * prob_half_width_target(q)); collapses to
// pi / (2 (q + 2)) analytically, computed through the same chain the other
// closed forms use.
double amplified_angle_cap(double q) {
  return std::asin(std::sqrt(2.0 * prob_half_width_target(q)));
}

}  // namespace

void validate_schedule_inputs(const ScheduleInputs& in) {
  if (!(in.q > 1.0)) {
    throw std::invalid_argument("schedule: q must exceed 1");
  }
  if (!(in.epsilon > 0.0 && in.epsilon < 0.5)) {
    throw std::invalid_argument("schedule: epsilon must lie in (0, 1/2)");
  }
  if (!(in.gamma > 0.0 && in.gamma < 1.0)) {
    throw std::invalid_argument("schedule: gamma must lie in (0, 1)");
  }
  if (!(iteration_bound(in.q, in.epsilon) > 1.0)) {
    throw std::invalid_argument(
        "schedule: iteration bound is not above 1; the requested precision is "
        "too coarse for this policy");
  }
}

double prob_half_width_target(double q) {
  const double s = std::sin(kPi / (2.0 * (q + 2.0)));
  return 0.5 * s * s;
}

double first_shift_value(double q) {
  return 0.5 * std::sin(kPi / (2.0 * (q + 2.0)));
}

double iteration_bound(double q, double epsilon) {
  return std::log(q * q * amplified_angle_cap(q) / std::asin(2.0 * epsilon)) /
         std::log(q);
}

int amplification_cap(double q, double epsilon) {
  const double raw =
      0.5 * amplified_angle_cap(q) / std::asin(2.0 * epsilon) - 0.5;
  return static_cast<int>(std::ceil(raw));
}

Schedule derive_schedule(const ScheduleInputs& in) {
  validate_schedule_inputs(in);

  Schedule s;
  s.inputs = in;
  s.prob_half_width = prob_half_width_target(in.q);
  s.iteration_bound = iteration_bound(in.q, in.epsilon);
  s.iteration_failure_prob = in.gamma / s.iteration_bound;
  s.shots_per_iteration = static_cast<std::int64_t>(
      std::ceil(std::log(2.0 * s.iteration_bound / in.gamma) /
                (2.0 * s.prob_half_width * s.prob_half_width)));
  // Half-width actually delivered once the shot count is rounded up; never
  // exceeds the planned value.
  s.realized_prob_half_width =
      std::sqrt(std::log(2.0 / s.iteration_failure_prob) /
                (2.0 * static_cast<double>(s.shots_per_iteration)));
  s.first_shift = first_shift_value(in.q);
  s.max_amplification = amplification_cap(in.q, in.epsilon);
  return s;
}

}  // namespace rqae
