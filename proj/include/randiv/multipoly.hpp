#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "randiv/affine.hpp"
#include "randiv/rational.hpp"
#include "randiv/upoly.hpp"

namespace randiv {

/// Exponent vector over (x_0..x_{nx-1}, eps); eps is the last slot.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over x_0..x_{nx-1} and eps with rational
/// coefficients. No zero coefficients are stored.
class MultiPoly {
public:
    explicit MultiPoly(int nx) : nx_(nx) {}
    static MultiPoly constant(int nx, Rational c);
    static MultiPoly from_affine(const AffineForm& f);

    int nx() const { return nx_; }
    int eps_slot() const { return nx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    bool involves(int var) const;
    int degree_in(int var) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rational& s) const;

    MultiPoly antiderivative(int var) const;
    MultiPoly derivative(int var) const;
    /// Replace variable `var` (an x index or the eps slot) by an affine
    /// expression not involving it.
    MultiPoly substituted(int var, const AffineForm& repl) const;

    /// Conversion to a univariate polynomial in eps; requires all x exponents
    /// to be zero.
    UPoly to_upoly() const;

    bool operator==(const MultiPoly& o) const = default;

private:
    void add_term(const Monomial& m, const Rational& c);
    int nx_;
    std::map<Monomial, Rational> terms_;
};

/// Definite integral of p in `var` from `lower` to `upper`: F(upper)-F(lower)
/// where F is the antiderivative in var. Bounds must not involve var; the
/// result does not involve var.
MultiPoly integrate_between(const MultiPoly& p, int var, const AffineForm& lower,
                            const AffineForm& upper);

}  // namespace randiv
