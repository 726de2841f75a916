#include "rqae/backend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rqae {

std::int64_t OracleBackend::measure(double shift, int amplification, std::int64_t shots,
                                    RandomStream& rng) const {
  if (shots < 1) {
    throw std::invalid_argument("measure: shots must be at least 1");
  }
  return rng.binomial(shots, exact_probability(shift, amplification));
}

AnalyticBackend::AnalyticBackend(double amplitude) : amplitude_(amplitude) {
  if (!(std::abs(amplitude) <= 1.0)) {
    throw std::invalid_argument("analytic backend: |amplitude| must not exceed 1");
  }
}

double AnalyticBackend::exact_probability(double shift, int amplification) const {
  if (amplification < 0) {
    throw std::invalid_argument("analytic backend: negative amplification");
  }
  const double shifted = amplitude_ + shift;
  if (!(std::abs(shifted) <= 1.0)) {
    throw std::invalid_argument("analytic backend: |amplitude + shift| must not exceed 1");
  }
  const double s = std::sin((2.0 * amplification + 1.0) * std::asin(shifted));
  return std::min(s * s, 1.0);
}

}  // namespace rqae
