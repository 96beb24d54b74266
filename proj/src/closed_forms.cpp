#include "randiv/closed_forms.hpp"

#include <stdexcept>

namespace randiv {

Integer binomial(long a, long b) {
    if (b < 0 || b > a) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

PiecewisePoly p_n1(int n) {
    if (n < 2) throw std::invalid_argument("p_n1: need n >= 2");
    const Rational support(1, n - 1);
    const UPoly body = UPoly::one_plus(Rational(-(n - 1))).pow(static_cast<unsigned>(n));
    if (support == Rational(1)) return PiecewisePoly({Rational(0), Rational(1)}, {body});
    return PiecewisePoly({Rational(0), support, Rational(1)}, {body, UPoly()});
}

Integer catalan(int m) {
    if (m < 1) throw std::invalid_argument("catalan: need m >= 1");
    Integer r = binomial(2L * m, m - 1L);
    if (!mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(m)))
        throw std::logic_error("catalan: non-integral value");
    return r / m;
}

RangedFormula p_2m_2(int m) {
    if (m < 2) throw std::invalid_argument("p_2m_2: need m >= 2");
    UPoly poly = UPoly::one_plus(Rational(-(m - 1))).pow(static_cast<unsigned>(2 * m));
    poly = poly.scaled(Rational(catalan(m)));
    return RangedFormula{Rational(1, m), Rational(1, m - 1), std::move(poly)};
}

RangedFormula p_2m1_2(int m) {
    if (m < 1) throw std::invalid_argument("p_2m1_2: need m >= 1");
    const UPoly a = UPoly::one_plus(Rational(-m));        // 1 - m e
    const UPoly b = UPoly::one_plus(Rational(-(m - 1)));  // 1 - (m-1) e
    auto term = [&](long choose, int ea, int eb) {
        const Integer c = binomial(2L * m + 1, choose);
        if (sgn(c) == 0) return UPoly();
        return (a.pow(ea) * b.pow(eb)).scaled(Rational(c));
    };
    UPoly poly = term(m + 1, m + 1, m);
    poly -= term(m + 2, m + 2, m - 1).scaled(Rational(2));
    poly += term(m + 3, m + 3, m >= 2 ? m - 2 : 0);
    return RangedFormula{Rational(1, m + 1), Rational(1, m), std::move(poly)};
}

}  // namespace randiv
