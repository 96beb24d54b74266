#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "randiv/errors.hpp"
#include "randiv/rational.hpp"

namespace randiv {

/// Quantized model: the unit interval split into r boxes, n indistinguishable
/// balls, a window of l adjacent boxes standing in for a length-eps
/// subinterval, and a per-window capacity k.
struct DiscreteConfig {
    long r;
    long n;
    long l;
    long k;
    void validate() const;
};

/// Q(r,n) = C(n+r-1, r-1): all ways to drop n balls into r boxes.
Integer count_total(long r, long n);

/// Placements where every window of l consecutive boxes holds at most k
/// balls. DP over boxes; the state is the occupancy of the last l-1 boxes,
/// which always carries at most k balls.
Integer count_admissible(const DiscreteConfig& cfg);

/// Same count by direct enumeration of all compositions; the oracle for the
/// DP. Refuses configurations with more than `budget` placements.
Integer brute_force_admissible(const DiscreteConfig& cfg, std::size_t budget = 10'000'000);

/// Window length for a target eps: round(eps*r) half-up, clamped to [1, r].
long window_len_for(const Rational& eps, long r);

/// Exact ratios count_admissible/count_total for each r, with l derived from
/// eps. Converges to P_{n,k}(eps) as r grows.
std::vector<std::pair<long, Rational>> limit_ratio(long n, long k, const Rational& eps,
                                                   const std::vector<long>& r_list);

}  // namespace randiv
