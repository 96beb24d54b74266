#include <doctest.h>

#include "randiv/engine.hpp"

using namespace randiv;

namespace {

std::vector<Rational> rats(std::initializer_list<long> vs) {
    std::vector<Rational> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("derivative values at zero for the small families") {
    // P_{2,1} = (1-e)^2
    CHECK(derivatives_at_zero(2, 1, 2, DerivBackend::engine_diff) == rats({1, -2, 2}));
    CHECK(derivatives_at_zero(2, 1, 2, DerivBackend::delta) == rats({1, -2, 2}));

    // P_{3,2} = 1 - 3e^2 + 2e^3
    CHECK(derivatives_at_zero(3, 2, 3, DerivBackend::engine_diff) == rats({1, 0, -6, 12}));
    CHECK(derivatives_at_zero(3, 2, 3, DerivBackend::delta) == rats({1, 0, -6, 12}));

    // k >= n: P is identically 1
    CHECK(derivatives_at_zero(3, 3, 3, DerivBackend::delta) == rats({1, 0, 0, 0}));
    CHECK(derivatives_at_zero(2, 7, 2, DerivBackend::engine_diff) == rats({1, 0, 0}));
}

TEST_CASE("the two backends agree exactly") {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(derivatives_at_zero(n, k, n, DerivBackend::engine_diff) ==
                  derivatives_at_zero(n, k, n, DerivBackend::delta));
        }
    }
}

TEST_CASE("derivative order is capped at n") {
    CHECK_THROWS_AS(derivatives_at_zero(3, 1, 4, DerivBackend::delta), std::invalid_argument);
    CHECK_THROWS_AS(derivatives_at_zero(3, 1, -1, DerivBackend::delta), std::invalid_argument);
    CHECK(derivatives_at_zero(4, 2, 0, DerivBackend::delta) == rats({1}));
}
