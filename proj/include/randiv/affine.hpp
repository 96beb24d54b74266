#pragma once

#include <compare>
#include <string>
#include <vector>

#include "randiv/rational.hpp"

namespace randiv {

/// Affine expression c + e*eps + sum_i a_i * x_i over x_0..x_{nx-1}.
///
/// Used both as a strict constraint "form > 0" and as an integration bound.
/// Constraint sets store the normalized representative (divided by the
/// positive content, so coefficients are integers with gcd 1 and the sign is
/// preserved); bound expressions are kept exact, since rescaling a bound
/// changes its value.
class AffineForm {
public:
    explicit AffineForm(int nx) : constant_(0), eps_(0), x_(nx, Rational(0)) {}

    static AffineForm constant(int nx, Rational c);
    static AffineForm variable(int nx, int var);
    static AffineForm eps(int nx);

    int nx() const { return static_cast<int>(x_.size()); }
    const Rational& constant_part() const { return constant_; }
    const Rational& eps_coeff() const { return eps_; }
    const Rational& x_coeff(int i) const { return x_.at(i); }

    AffineForm& set_constant(Rational c) { constant_ = std::move(c); return *this; }
    AffineForm& set_eps_coeff(Rational c) { eps_ = std::move(c); return *this; }
    AffineForm& set_x_coeff(int i, Rational c) { x_.at(i) = std::move(c); return *this; }

    bool is_zero() const;
    /// True when no x variable and no eps appear (a plain constant).
    bool is_constant() const;
    /// True when no x variable appears (constant + eps only).
    bool is_x_free() const;
    bool involves_x(int i) const { return !x_.at(i).is_zero(); }

    AffineForm operator+(const AffineForm& o) const;
    AffineForm operator-(const AffineForm& o) const;
    AffineForm operator-() const;
    AffineForm scaled(const Rational& s) const;

    /// Divide by the positive content (gcd of numerators / lcm of
    /// denominators over nonzero coefficients). Zero form stays zero.
    AffineForm normalized() const;

    /// Replace x_var by an affine expression (which must not involve x_var).
    AffineForm substituted(int var, const AffineForm& repl) const;

    /// Value of an x-free form at a given eps.
    Rational eval_x_free(const Rational& eps_value) const;

    bool operator==(const AffineForm& o) const = default;
    std::strong_ordering operator<=>(const AffineForm& o) const;

    std::string str() const;

private:
    Rational constant_;
    Rational eps_;
    std::vector<Rational> x_;
};

}  // namespace randiv
