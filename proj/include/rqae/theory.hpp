#pragma once

#include <utility>

#include "rqae/interval.hpp"
#include "rqae/schedule.hpp"

namespace rqae {

struct BoundReport {
  double q = 0.0;
  double epsilon = 0.0;
  double gamma = 0.0;
  int depth_cap = 0;               // largest admissible Grover exponent
  double iteration_bound = 0.0;    // real-valued cap on the iteration count
  double oracle_call_bound = 0.0;  // closed-form cap on the Grover-call total
  double classical_cost = 0.0;     // unamplified-sampling reference, 1/eps^2
  double quadratic_cost = 0.0;     // ideal quadratic-speedup reference, 1/eps
  double iqae_reference = 0.0;     // reference curve for the competing iterative scheme
};

// Closed-form cap on the total number of Grover-oracle calls a run may spend.
double oracle_call_bound(double q, double epsilon, double gamma);

// Comparison curve (50/eps) * ln((2/gamma) * log2(pi/(4 eps))).
double iqae_reference_curve(double epsilon, double gamma);

// Tight probability interval for the squared amplitude. Requires both bounds
// in [-1/2, 1/2]; guarantees a^2 is covered whenever a is in the input and
// the output is never wider than the input.
std::pair<double, double> amplitude_to_probability_interval(const ConfidenceInterval& interval);

// Same closed forms the schedule freezes; aliased here so callers plotting
// overlays and callers deriving run parameters can never disagree.
inline int depth_bound(double q, double epsilon) { return amplification_cap(q, epsilon); }
// iteration_bound(q, epsilon) is declared in schedule.hpp and shared as-is.

BoundReport bound_report(double q, double epsilon, double gamma);

}  // namespace rqae
