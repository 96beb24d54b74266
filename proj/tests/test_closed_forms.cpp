#include <doctest.h>

#include "randiv/catalan3d.hpp"
#include "randiv/closed_forms.hpp"

using namespace randiv;

TEST_CASE("single-occupancy family") {
    CHECK(p_n1(2).eval(Rational(1, 2)) == Rational(1, 4));
    CHECK(p_n1(3).eval(Rational(1, 10)) == Rational(64, 125));
    CHECK(p_n1(5).eval(Rational(1, 4)) == Rational(0));
    CHECK(p_n1(2).pieces().size() == 1);  // support reaches 1, no zero tail
    CHECK(p_n1(4).breakpoints() ==
          std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1)});
    CHECK_THROWS_AS(p_n1(1), std::invalid_argument);
}

TEST_CASE("catalan numbers") {
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK(catalan(10) == 16796);
    CHECK_THROWS_AS(catalan(0), std::invalid_argument);
}

TEST_CASE("even pair-occupancy family") {
    const RangedFormula f2 = p_2m_2(2);
    CHECK(f2.lo == Rational(1, 2));
    CHECK(f2.hi == Rational(1));
    CHECK(f2.poly == UPoly::one_plus(Rational(-1)).pow(4).scaled(Rational(2)));
    CHECK(f2.poly.eval(Rational(1, 2)) == Rational(1, 8));
    CHECK(f2.poly.eval(Rational(1)) == Rational(0));

    const RangedFormula f3 = p_2m_2(3);
    CHECK(f3.poly == UPoly::one_plus(Rational(-2)).pow(6).scaled(Rational(5)));
    CHECK(f3.lo == Rational(1, 3));
    CHECK(f3.hi == Rational(1, 2));

    CHECK_THROWS_AS(p_2m_2(1), std::invalid_argument);
}

TEST_CASE("odd pair-occupancy family") {
    const RangedFormula f1 = p_2m1_2(1);
    CHECK(f1.lo == Rational(1, 2));
    CHECK(f1.hi == Rational(1));
    // 3(1-e)^2 - 2(1-e)^3 expands to 1 - 3e^2 + 2e^3
    CHECK(f1.poly == UPoly({Rational(1), Rational(0), Rational(-3), Rational(2)}));
    CHECK(f1.poly.eval(Rational(1, 2)) == Rational(1, 2));
    CHECK(f1.poly.eval(Rational(1)) == Rational(0));

    // at the left edge of the m=2 range every product carries (1-2e) -> 0 at 1/2
    const RangedFormula f2 = p_2m1_2(2);
    CHECK(f2.lo == Rational(1, 3));
    CHECK(f2.hi == Rational(1, 2));
    CHECK(f2.poly.eval(Rational(1, 2)) == Rational(0));

    CHECK_THROWS_AS(p_2m1_2(0), std::invalid_argument);
}

TEST_CASE("catalan coefficient equals the three-letter count with no c letters") {
    for (int m = 1; m <= 8; ++m) CHECK(catalan(m) == q3d_formula(m, m, 0));
}
