#pragma once

#include <string>
#include <vector>

#include "randiv/rational.hpp"

namespace randiv {

/// Univariate polynomial in eps with rational coefficients, ascending degree,
/// no trailing zero coefficients (the zero polynomial has no coefficients).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(Rational c);
    /// 1 + c*eps
    static UPoly one_plus(Rational c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int d) const;

    Rational eval(const Rational& x) const;
    UPoly derivative() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rational& s) const;
    UPoly pow(unsigned e) const;

    bool operator==(const UPoly& o) const = default;

    /// Expanded form, e.g. "1 - 6e + 12e^2 - 8e^3"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace randiv
