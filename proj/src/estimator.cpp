#include "rqae/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rqae {

namespace {

ConfidenceInterval clamped_interval(double low, double high) {
  return {std::clamp(low, -1.0, 1.0), std::clamp(high, -1.0, 1.0)};
}

}  // namespace

ConfidenceInterval first_interval(double p_sum, double p_diff, double shift,
                                  double prob_half_width) {
  if (shift == 0.0) {
    throw std::invalid_argument("first iteration: shift must be nonzero");
  }
  const double estimate = (p_sum - p_diff) / (4.0 * shift);
  const double half = prob_half_width / std::abs(2.0 * shift);
  return clamped_interval(estimate - half, estimate + half);
}

IterationRecord first_iteration(const Schedule& schedule, const OracleBackend& backend,
                                RandomStream& rng) {
  const double shift = schedule.first_shift;
  if (shift == 0.0) {
    throw std::invalid_argument("first iteration: schedule carries a zero shift");
  }
  const std::int64_t shots = schedule.shots_per_iteration;
  const std::int64_t hits_sum = backend.measure(shift, 0, shots, rng);
  const std::int64_t hits_diff = backend.measure(-shift, 0, shots, rng);
  const double p_sum = static_cast<double>(hits_sum) / static_cast<double>(shots);
  const double p_diff = static_cast<double>(hits_diff) / static_cast<double>(shots);
  const double half = schedule.realized_prob_half_width;

  IterationRecord rec;
  rec.index = 1;
  rec.shift = shift;
  rec.amplification = 0;
  rec.capped = false;
  rec.shots = shots;
  // The record keeps the +shift experiment; the -shift outcome is folded
  // into the interval through the reconstruction identity.
  rec.hits = hits_sum;
  rec.p_hat = p_sum;
  rec.p_min = std::max(p_sum - half, 0.0);
  rec.p_max = std::min(p_sum + half, 1.0);
  rec.interval = first_interval(p_sum, p_diff, shift, half);
  rec.grover_calls_cum = 0;
  rec.base_calls_cum = 2 * shots;  // two independent unamplified experiments
  return rec;
}

double choose_shift(const ConfidenceInterval& previous) {
  return 0.0 - previous.low;
}

AmplificationChoice choose_amplification(double half_width, int cap) {
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("choose_amplification: half-width must be positive");
  }
  if (!(2.0 * half_width <= 1.0)) {
    throw std::invalid_argument("choose_amplification: interval width exceeds 1");
  }
  if (cap < 0) {
    throw std::invalid_argument("choose_amplification: negative cap");
  }
  const double raw =
      std::numbers::pi / (4.0 * std::asin(2.0 * half_width)) - 0.5;
  // The nudge keeps inputs that land exactly on a real-arithmetic boundary
  // (e.g. half-width 1/4) from being floored one step short.
  const double fan = std::floor(raw + 1e-9);
  if (fan > static_cast<double>(cap)) {
    return {cap, true};
  }
  return {static_cast<int>(fan), false};
}

ConfidenceInterval refine_interval(double p_min, double p_max, int amplification,
                                   double shift) {
  if (!(0.0 <= p_min && p_min <= p_max && p_max <= 1.0)) {
    throw std::invalid_argument("refine_interval: need 0 <= p_min <= p_max <= 1");
  }
  if (amplification < 0) {
    throw std::invalid_argument("refine_interval: negative amplification");
  }
  const double factor = 2.0 * amplification + 1.0;
  const double low = std::sin(std::asin(std::sqrt(p_min)) / factor) - shift;
  const double high = std::sin(std::asin(std::sqrt(p_max)) / factor) - shift;
  return clamped_interval(low, high);
}

RunResult run(const Schedule& schedule, const OracleBackend& backend, RandomStream& rng) {
  const double target = schedule.inputs.epsilon;
  const std::int64_t shots = schedule.shots_per_iteration;
  const int limit =
      static_cast<int>(std::ceil(schedule.iteration_bound)) + 2;

  RunResult out;
  out.iterations.push_back(first_iteration(schedule, backend, rng));
  out.grover_calls = 0;
  out.base_calls = out.iterations.back().base_calls_cum;

  while (out.iterations.back().interval.half_width() > target) {
    if (static_cast<int>(out.iterations.size()) + 1 > limit) {
      out.interval = out.iterations.back().interval;
      out.estimate = out.interval.center();
      out.converged = false;
      throw IterationLimitError(
          "estimation loop exceeded its scheduled iteration bound; this "
          "indicates a defective backend or implementation",
          std::move(out));
    }
    const IterationRecord& prev = out.iterations.back();

    IterationRecord rec;
    rec.index = prev.index + 1;
    rec.shift = choose_shift(prev.interval);
    const AmplificationChoice amp =
        choose_amplification(prev.interval.half_width(), schedule.max_amplification);
    rec.amplification = amp.amplification;
    rec.capped = amp.capped;
    rec.shots = shots;
    rec.hits = backend.measure(rec.shift, rec.amplification, shots, rng);
    rec.p_hat = static_cast<double>(rec.hits) / static_cast<double>(shots);
    rec.p_min = std::max(rec.p_hat - schedule.realized_prob_half_width, 0.0);
    rec.p_max = std::min(rec.p_hat + schedule.realized_prob_half_width, 1.0);
    rec.interval = refine_interval(rec.p_min, rec.p_max, rec.amplification, rec.shift);

    out.grover_calls += shots * rec.amplification;
    out.base_calls += shots * (2 * rec.amplification + 1);
    rec.grover_calls_cum = out.grover_calls;
    rec.base_calls_cum = out.base_calls;
    out.iterations.push_back(rec);
  }

  out.interval = out.iterations.back().interval;
  out.estimate = out.interval.center();
  out.converged = true;
  return out;
}

}  // namespace rqae
