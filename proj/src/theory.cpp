#include "rqae/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rqae {

namespace {
constexpr double kPi = std::numbers::pi;
}

double oracle_call_bound(double q, double epsilon, double gamma) {
  validate_schedule_inputs({q, epsilon, gamma});
  const double s = std::sin(kPi / (2.0 * (q + 2.0)));
  const double reach = kPi / (2.0 * (q + 2.0) * std::asin(2.0 * epsilon));
  const double iterations = std::log(q * q * reach) / std::log(q);
  const double log_term =
      std::log(2.0 * std::sqrt(std::numbers::e) * iterations / gamma);
  return (1.0 / (s * s * s * s)) * log_term * (reach + 2.0) * (1.0 + q / (q - 1.0));
}

double iqae_reference_curve(double epsilon, double gamma) {
  if (!(epsilon > 0.0 && epsilon < kPi / 4.0)) {
    throw std::invalid_argument("iqae reference: epsilon must lie in (0, pi/4)");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("iqae reference: gamma must lie in (0, 1)");
  }
  return (50.0 / epsilon) * std::log((2.0 / gamma) * std::log2(kPi / (4.0 * epsilon)));
}

std::pair<double, double> amplitude_to_probability_interval(
    const ConfidenceInterval& interval) {
  const double lo = interval.low;
  const double hi = interval.high;
  if (!(lo <= hi)) {
    throw std::invalid_argument("probability interval: inverted input");
  }
  if (!(std::abs(lo) <= 0.5 && std::abs(hi) <= 0.5)) {
    throw std::invalid_argument("probability interval: bounds must lie in [-1/2, 1/2]");
  }
  if (lo >= 0.0) {
    return {lo * lo, hi * hi};
  }
  if (hi <= 0.0) {
    return {hi * hi, lo * lo};
  }
  // Straddling zero: the squared amplitude can reach zero, and at most the
  // square of the larger endpoint magnitude.
  const double m = std::max(-lo, hi);
  return {0.0, m * m};
}

BoundReport bound_report(double q, double epsilon, double gamma) {
  BoundReport r;
  r.q = q;
  r.epsilon = epsilon;
  r.gamma = gamma;
  r.depth_cap = depth_bound(q, epsilon);
  r.iteration_bound = iteration_bound(q, epsilon);
  r.oracle_call_bound = oracle_call_bound(q, epsilon, gamma);
  r.classical_cost = 1.0 / (epsilon * epsilon);
  r.quadratic_cost = 1.0 / epsilon;
  r.iqae_reference = iqae_reference_curve(epsilon, gamma);
  return r;
}

}  // namespace rqae
