#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "randiv/errors.hpp"
#include "randiv/piecewise.hpp"
#include "randiv/term.hpp"

namespace randiv {

/// The integration region D_{n,k}(eps): ordering/boundary constraints
/// 0 < x_1 < ... < x_n < 1 plus the window constraints
/// x_{i+k} - x_i > eps (absent when k >= n).
struct RegionSpec {
    int n;
    int k;
    std::vector<AffineForm> constraints;
    static RegionSpec make(int n, int k);
};

enum class ElimOrder { ascending, greedy };

struct EngineOptions {
    ElimOrder order = ElimOrder::ascending;
    std::size_t term_budget = 10'000'000;
    bool pruning = true;
};

/// Coefficient 1 with the D_{n,k} constraint system.
Term build_initial_term(int n, int k);

struct SplitCase {
    AffineForm lower;
    AffineForm upper;
    Term residual;
};

/// Rewrites the product of indicators bounding x_var into disjoint cases: one
/// per (lower bound j, upper bound i) pair, each carrying the guard
/// upper-lower > 0 plus the constraints selecting bound j as the largest lower
/// and bound i as the smallest upper. Degenerate cases are dropped.
std::vector<SplitCase> split_indicator_product(const Term& t, int var);

/// Integrates x_var out of the term: one output term per split case, with the
/// coefficient integrated between the case bounds.
std::vector<Term> integrate_out(const Term& t, int var);

/// Exact rational feasibility of the term's open constraint system with eps
/// confined to (eps_range.first, eps_range.second); decided by
/// Fourier-Motzkin elimination. Returns false only for infeasible systems.
bool prune_infeasible(const Term& t, const std::pair<Rational, Rational>& eps_range);

/// Assembles terms whose constraints involve only eps into a piecewise
/// polynomial on [0,1]: each constraint set resolves to an open interval,
/// coefficients are summed per elementary range, adjacent equal pieces merge.
PiecewisePoly assemble_piecewise(const std::vector<Term>& final_terms);

/// P_{n,k}(eps) as an exact piecewise polynomial on [0,1].
PiecewisePoly compute_pnk(int n, int k, const EngineOptions& options = {});

enum class DerivBackend { engine_diff, delta };

/// d^j P_{n,k}/d eps^j at eps -> 0+ for j = 0..j_max (j_max <= n).
/// engine_diff differentiates the first piece of compute_pnk; delta
/// differentiates the indicator-product integral symbolically, resolving each
/// Dirac delta by eliminating one variable, and evaluates the remaining
/// volumes at eps = 0 with the core integrator.
std::vector<Rational> derivatives_at_zero(int n, int k, int j_max, DerivBackend backend,
                                          const EngineOptions& options = {});

}  // namespace randiv
