#pragma once

#include "randiv/piecewise.hpp"
#include "randiv/rational.hpp"
#include "randiv/upoly.hpp"

namespace randiv {

/// A polynomial in eps together with the open interval on which it is known
/// to equal P_{n,k}.
struct RangedFormula {
    Rational lo;
    Rational hi;
    UPoly poly;
};

/// Binomial coefficient; 0 when b < 0 or b > a.
Integer binomial(long a, long b);

/// P_{n,1}: (1-(n-1)eps)^n up to eps = 1/(n-1), then 0. Requires n >= 2.
PiecewisePoly p_n1(int n);

/// Classical Catalan number (1/m) C(2m, m-1). Requires m >= 1.
Integer catalan(int m);

/// P_{2m,2} on (1/m, 1/(m-1)): (1/m) C(2m, m-1) (1-(m-1)eps)^{2m}.
/// Requires m >= 2.
RangedFormula p_2m_2(int m);

/// P_{2m+1,2} on (1/(m+1), 1/m): the three-term expression
///   C(2m+1,m+1)(1-m e)^{m+1}(1-(m-1)e)^m
/// - 2C(2m+1,m+2)(1-m e)^{m+2}(1-(m-1)e)^{m-1}
/// + C(2m+1,m+3)(1-m e)^{m+3}(1-(m-1)e)^{m-2},
/// where a term vanishes with its binomial coefficient. Requires m >= 1.
RangedFormula p_2m1_2(int m);

}  // namespace randiv
