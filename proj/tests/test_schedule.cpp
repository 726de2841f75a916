#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "rqae/random.hpp"
#include "rqae/schedule.hpp"

using rqae::derive_schedule;
using rqae::Schedule;
using rqae::ScheduleInputs;

namespace {

// Frozen from tests/golden/compute_golden.py (mpmath, 60 digits).
struct Golden {
  double q;
  double prob_half_width;
  double iteration_bound;
  double iteration_failure_prob;
  std::int64_t shots;
  double realized_prob_half_width;
  double first_shift;
  int max_amplification;
};

constexpr Golden kGolden[] = {
    {2.0, 0.073223304703363119, 9.6172794523363013, 0.0051989754740727251, 556,
     0.073163614305598434, 0.19134171618254489, 98},
    {10.0, 0.0085185434277329283, 3.8159083457884674, 0.013103040080924344, 34645,
     0.008518534112361742, 0.065263096110025796, 33},
    {20.0, 0.0025446395297668169, 3.1934136155112102, 0.015657226410364592, 374505,
     0.0025446362725522132, 0.03566959159961617, 18},
};

doctest::Approx near(double x) { return doctest::Approx(x).epsilon(1e-12); }

}  // namespace

TEST_CASE("golden parameter table at eps=1e-3, gamma=0.05") {
  for (const Golden& g : kGolden) {
    CAPTURE(g.q);
    const Schedule s = derive_schedule({g.q, 1e-3, 0.05});
    CHECK(s.prob_half_width == near(g.prob_half_width));
    CHECK(s.iteration_bound == near(g.iteration_bound));
    CHECK(s.iteration_failure_prob == near(g.iteration_failure_prob));
    CHECK(s.shots_per_iteration == g.shots);
    CHECK(s.realized_prob_half_width == near(g.realized_prob_half_width));
    CHECK(s.first_shift == near(g.first_shift));
    CHECK(s.max_amplification == g.max_amplification);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(derive_schedule({1.0, 1e-3, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(derive_schedule({0.5, 1e-3, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(derive_schedule({2.0, 0.0, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(derive_schedule({2.0, 0.5, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(derive_schedule({2.0, -1e-3, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(derive_schedule({2.0, 1e-3, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(derive_schedule({2.0, 1e-3, 1.0}), std::invalid_argument);
}

TEST_CASE("precision too coarse for the policy is rejected") {
  // Iteration bounds 0.760 and 0.488 respectively (frozen).
  CHECK_THROWS_AS(derive_schedule({2.0, 0.4, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(derive_schedule({2.0, 0.45, 0.05}), std::invalid_argument);
  // Still above one at eps = 0.25: the schedule is coarse but valid, with a
  // zero amplification cap.
  const Schedule s = derive_schedule({2.0, 0.25, 0.05});
  CHECK(s.iteration_bound == near(1.5849625007211562));
  CHECK(s.max_amplification == 0);
}

TEST_CASE("realized half-width never exceeds the planned one") {
  rqae::RandomStream rng(7);
  int checked = 0;
  while (checked < 200) {
    const double q = rng.next_range(1.01, 30.0);
    const double eps = std::exp(rng.next_range(std::log(1e-5), std::log(0.2)));
    const double gamma = rng.next_range(1e-4, 0.5);
    Schedule s;
    try {
      s = derive_schedule({q, eps, gamma});
    } catch (const std::invalid_argument&) {
      continue;  // iteration bound not above 1 on this draw
    }
    CAPTURE(q);
    CAPTURE(eps);
    CAPTURE(gamma);
    CHECK(s.realized_prob_half_width <= s.prob_half_width);
    CHECK(s.iteration_failure_prob > 0.0);
    CHECK(s.iteration_failure_prob < gamma);
    CHECK(s.first_shift > 0.0);
    CHECK(s.first_shift <= 0.5);
    CHECK(s.prob_half_width <= 0.5);
    CHECK(s.max_amplification >= 0);
    ++checked;
  }
}

TEST_CASE("monotonicity in the policy ratio") {
  const Schedule s2 = derive_schedule({2.0, 1e-3, 0.05});
  const Schedule s10 = derive_schedule({10.0, 1e-3, 0.05});
  const Schedule s20 = derive_schedule({20.0, 1e-3, 0.05});
  CHECK(s2.prob_half_width > s10.prob_half_width);
  CHECK(s10.prob_half_width > s20.prob_half_width);
  CHECK(s2.first_shift > s10.first_shift);
  CHECK(s10.first_shift > s20.first_shift);
  CHECK(s2.shots_per_iteration <= s10.shots_per_iteration);
  CHECK(s10.shots_per_iteration <= s20.shots_per_iteration);
}

TEST_CASE("monotonicity in the precision") {
  const double eps_grid[] = {1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
  double prev_bound = std::numeric_limits<double>::infinity();
  int prev_cap = std::numeric_limits<int>::max();
  for (const double eps : eps_grid) {
    const Schedule s = derive_schedule({2.0, eps, 0.05});
    CHECK(s.iteration_bound <= prev_bound);
    CHECK(s.max_amplification <= prev_cap);
    prev_bound = s.iteration_bound;
    prev_cap = s.max_amplification;

    // The cap times the interval angle stays within one angle step of half
    // the amplified-angle budget.
    const double angle = std::asin(2.0 * eps);
    const double budget = std::asin(std::sqrt(2.0 * s.prob_half_width));
    const double reach = s.max_amplification * angle;
    CHECK(reach >= 0.5 * budget - angle - 1e-12);
    CHECK(reach <= 0.5 * budget + angle + 1e-12);
  }
}

TEST_CASE("derivation is deterministic") {
  const Schedule a = derive_schedule({2.0, 1e-3, 0.05});
  const Schedule b = derive_schedule({2.0, 1e-3, 0.05});
  CHECK(std::memcmp(&a, &b, sizeof(Schedule)) == 0);
}
