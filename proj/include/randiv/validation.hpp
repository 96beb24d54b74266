#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace randiv {

struct CheckRecord {
    std::string name;     // "c<criterion>.<check>"
    std::string params;
    std::string value_a;  // method A / computed
    std::string value_b;  // method B / expected
    bool pass = false;
    double seconds = 0.0;
};

struct ValidationOptions {
    int max_n = 8;                    // top n for the k=1 family
    int max_lmn = 8;                  // catalan3d grid bound
    std::uint64_t trials = 1'000'000; // Monte Carlo trials per case
    std::uint64_t seed = 424242;
    std::size_t term_budget = 10'000'000;
    unsigned mc_threads = 0;          // 0 = hardware concurrency
};

struct ValidationReport {
    std::vector<CheckRecord> checks;
    bool all_pass() const;
    std::size_t failures() const;
    nlohmann::json to_json() const;
};

/// Runs the full cross-validation matrix (closed forms vs engine, derivative
/// backends, structural invariants, discrete model, generalized Catalan
/// numbers, Monte Carlo). Deterministic for a given seed. If `progress` is
/// given, one line per record is written as checks complete.
ValidationReport run_acceptance(const ValidationOptions& options = {},
                                std::ostream* progress = nullptr);

}  // namespace randiv
