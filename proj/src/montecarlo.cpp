#include "randiv/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>

namespace randiv {

namespace {

constexpr std::uint64_t kChunk = 1u << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform in (0,1), identical on every conforming platform (no
// uniform_real_distribution, whose output is implementation-defined).
double to_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

bool sorted_gaps_ok(const std::vector<double>& pts, int k, double eps) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i + k < n; ++i)
        if (!(pts[i + k] - pts[i] > eps)) return false;
    return true;
}

std::uint64_t run_chunks(const TrialPlan& plan, std::uint64_t first_chunk,
                         std::uint64_t last_chunk) {
    std::uint64_t successes = 0;
    std::vector<double> pts(plan.n);
    for (std::uint64_t chunk = first_chunk; chunk < last_chunk; ++chunk) {
        std::mt19937_64 rng(splitmix64(plan.seed ^ (chunk + 1) * 0xD1342543DE82EF95ull));
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, plan.trials);
        for (std::uint64_t t = begin; t < end; ++t) {
            for (auto& p : pts) p = to_unit(rng());
            std::sort(pts.begin(), pts.end());
            if (sorted_gaps_ok(pts, plan.k, plan.eps)) ++successes;
        }
    }
    return successes;
}

}  // namespace

bool trial_succeeds(std::vector<double> points, int k, double eps) {
    std::sort(points.begin(), points.end());
    return sorted_gaps_ok(points, k, eps);
}

Estimate estimate(const TrialPlan& plan, unsigned threads) {
    if (plan.trials < 1) throw std::invalid_argument("estimate: need at least one trial");
    if (plan.n < 1 || plan.k < 1) throw std::invalid_argument("estimate: need n,k >= 1");
    if (!(plan.eps >= 0.0 && plan.eps <= 1.0))
        throw std::invalid_argument("estimate: eps must be in [0,1]");
    const std::uint64_t chunks = (plan.trials + kChunk - 1) / kChunk;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

    std::uint64_t successes = 0;
    if (threads <= 1) {
        successes = run_chunks(plan, 0, chunks);
    } else {
        std::vector<std::future<std::uint64_t>> parts;
        const std::uint64_t per = (chunks + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t lo = w * per;
            const std::uint64_t hi = std::min(lo + per, chunks);
            if (lo >= hi) break;
            parts.push_back(std::async(std::launch::async,
                                       [&plan, lo, hi] { return run_chunks(plan, lo, hi); }));
        }
        for (auto& p : parts) successes += p.get();
    }

    Estimate e{};
    e.successes = successes;
    e.trials = plan.trials;
    e.p_hat = static_cast<double>(successes) / static_cast<double>(plan.trials);
    e.stderr_ = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(plan.trials));
    e.ci_lo = e.p_hat - 1.96 * e.stderr_;
    e.ci_hi = e.p_hat + 1.96 * e.stderr_;
    return e;
}

}  // namespace randiv
