#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "randiv/montecarlo.hpp"

using namespace randiv;

TEST_CASE("trial success is the sorted k-gap condition") {
    const std::vector<double> spread{0.1, 0.5, 0.9};
    const std::vector<double> clustered{0.1, 0.2, 0.9};
    const std::vector<double> unsorted{0.9, 0.2, 0.1};
    const std::vector<double> pair{0.4, 0.6};
    CHECK(trial_succeeds(spread, 1, 0.3));
    CHECK_FALSE(trial_succeeds(clustered, 1, 0.3));
    CHECK(trial_succeeds(clustered, 2, 0.3));
    CHECK(trial_succeeds(unsorted, 2, 0.3));  // order does not matter
    CHECK(trial_succeeds(pair, 5, 0.9));      // k >= n: vacuous
}

TEST_CASE("estimates are deterministic per plan, independent of threads") {
    const TrialPlan plan{4, 2, 0.35, 200'000, 99};
    const Estimate a = estimate(plan, 1);
    const Estimate b = estimate(plan, 4);
    const Estimate c = estimate(plan, 0);
    CHECK(a.successes == b.successes);
    CHECK(a.successes == c.successes);
    CHECK(a.p_hat == b.p_hat);

    const TrialPlan other{4, 2, 0.35, 200'000, 100};
    CHECK(estimate(other, 2).successes != a.successes);
}

TEST_CASE("zero window never fails") {
    const TrialPlan plan{5, 1, 0.0, 20'000, 7};
    const Estimate e = estimate(plan);
    CHECK(e.p_hat == 1.0);
    CHECK(e.stderr_ == 0.0);
}

TEST_CASE("estimates land near the known probabilities") {
    // P_{2,1}(1/2) = 1/4
    const TrialPlan plan_a{2, 1, 0.5, 100'000, 11};
    const Estimate a = estimate(plan_a);
    CHECK(std::fabs(a.p_hat - 0.25) <= 4.0 * a.stderr_);

    // P_{4,2}(3/5) = 2 * (2/5)^4 = 0.0512
    const TrialPlan plan_b{4, 2, 0.6, 100'000, 12};
    const Estimate b = estimate(plan_b);
    CHECK(std::fabs(b.p_hat - 0.0512) <= 4.0 * b.stderr_);

    CHECK(a.ci_lo < 0.25);
    CHECK(0.25 < a.ci_hi);
}

TEST_CASE("input validation") {
    const TrialPlan no_trials{3, 1, 0.5, 0, 1};
    const TrialPlan bad_eps{3, 1, 1.5, 10, 1};
    const TrialPlan bad_n{0, 1, 0.5, 10, 1};
    CHECK_THROWS_AS(estimate(no_trials), std::invalid_argument);
    CHECK_THROWS_AS(estimate(bad_eps), std::invalid_argument);
    CHECK_THROWS_AS(estimate(bad_n), std::invalid_argument);
}
