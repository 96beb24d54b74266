#pragma once

#include <cstdint>
#include <vector>

namespace randiv {

struct TrialPlan {
    int n;
    int k;
    double eps;            // in [0,1]
    std::uint64_t trials;  // >= 1
    std::uint64_t seed;
};

/// Success of one drop: after sorting, x_(i+k) - x_(i) > eps for every i
/// (equivalently, no eps-window holds more than k points).
bool trial_succeeds(std::vector<double> points, int k, double eps);

struct Estimate {
    double p_hat;
    double stderr_;
    double ci_lo;  // p_hat - 1.96 * stderr
    double ci_hi;
    std::uint64_t successes;
    std::uint64_t trials;
};

/// Seeded estimate of P_{n,k}(eps). Trials run in fixed chunks of 2^16 with a
/// per-chunk generator derived from (seed, chunk), so the result is
/// bit-identical for a given plan regardless of thread count.
/// threads = 0 picks the hardware concurrency.
Estimate estimate(const TrialPlan& plan, unsigned threads = 0);

}  // namespace randiv
