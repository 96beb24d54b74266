#pragma once

#include <vector>

#include "randiv/affine.hpp"
#include "randiv/multipoly.hpp"

namespace randiv {

/// One summand of the expanded integral: a polynomial coefficient times a set
/// of strict affine constraints "form > 0".
///
/// Constraints are stored normalized, sorted and deduplicated. Adding a
/// constraint that makes the region degenerate (a non-positive constant, the
/// zero form, or the negation of a present constraint, which confines the
/// region to a measure-zero slab) reports the term as dead.
class Term {
public:
    explicit Term(MultiPoly coeff) : coeff_(std::move(coeff)) {}

    const MultiPoly& coeff() const { return coeff_; }
    void set_coeff(MultiPoly c) { coeff_ = std::move(c); }
    int nx() const { return coeff_.nx(); }

    const std::vector<AffineForm>& constraints() const { return constraints_; }

    /// Returns false when the constraint kills the term. Tautologies
    /// (positive constants) are dropped, duplicates ignored.
    [[nodiscard]] bool add_constraint(const AffineForm& f);

    /// True if any constraint involves x_var.
    bool constrains(int var) const;

    /// Deterministic ordering key for merge-by-constraint-set.
    friend bool constraint_set_less(const Term& a, const Term& b);

private:
    MultiPoly coeff_;
    std::vector<AffineForm> constraints_;
};

}  // namespace randiv
