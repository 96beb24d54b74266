#include <doctest.h>

#include <random>

#include "randiv/piecewise.hpp"

using namespace randiv;

namespace {

UPoly one_minus_eps_sq() { return UPoly::one_plus(Rational(-1)).pow(2); }

}  // namespace

TEST_CASE("pw_eval picks the covering piece") {
    const PiecewisePoly f({Rational(0), Rational(1)}, {one_minus_eps_sq()});
    CHECK(f.eval(Rational(1, 2)) == Rational(1, 4));
    CHECK(f.eval(Rational(0)) == Rational(1));
    CHECK(f.eval(Rational(1)) == Rational(0));

    const PiecewisePoly g({Rational(0), Rational(1, 2), Rational(1)},
                          {UPoly::one_plus(Rational(-2)).pow(3), UPoly()});
    CHECK(g.eval(Rational(1, 2)) == Rational(0));
    CHECK(g.eval(Rational(1, 4)) == Rational(1, 8));
    CHECK(g.is_continuous());

    CHECK_THROWS_AS(f.eval(Rational(3, 2)), std::domain_error);
    CHECK_THROWS_AS(f.eval(Rational(-1, 10)), std::domain_error);
}

TEST_CASE("construction validates the breakpoint list") {
    CHECK_THROWS_AS(PiecewisePoly({Rational(0)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePoly({Rational(0), Rational(1, 2)}, {UPoly()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePoly({Rational(0), Rational(0), Rational(1)}, {UPoly(), UPoly()}),
                    std::invalid_argument);
}

TEST_CASE("adjacent equal pieces merge and merging preserves evaluation") {
    const UPoly p = one_minus_eps_sq();
    const PiecewisePoly merged({Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)},
                               {p, p, UPoly::constant(Rational(4, 9))});
    CHECK(merged.pieces().size() == 2);
    CHECK(merged.breakpoints() ==
          std::vector<Rational>{Rational(0), Rational(2, 3), Rational(1)});

    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 30; ++iter) {
        // equal quarters with small random pieces, some duplicated
        std::vector<Rational> bps{Rational(0)};
        for (int i = 1; i <= 4; ++i) bps.push_back(Rational(i, 4));
        std::vector<UPoly> pieces;
        for (int i = 0; i < 4; ++i) {
            if (!pieces.empty() && rng() % 2 == 0) {
                pieces.push_back(pieces.back());
            } else {
                pieces.push_back(UPoly({Rational(static_cast<long>(rng() % 5)),
                                        Rational(static_cast<long>(rng() % 5) - 2)}));
            }
        }
        const PiecewisePoly direct(bps, pieces);
        // normalization is idempotent
        const PiecewisePoly again(direct.breakpoints(), direct.pieces());
        CHECK(again == direct);
        for (int q = 0; q <= 12; ++q) {
            const Rational x(q, 12);
            std::size_t idx = 0;
            while (idx + 1 < bps.size() && !(x < bps[idx + 1])) ++idx;
            if (idx >= pieces.size()) idx = pieces.size() - 1;
            CHECK(direct.eval(x) == pieces[idx].eval(x));
        }
    }
}

TEST_CASE("json serialization round trips through the documented schema") {
    const PiecewisePoly f({Rational(0), Rational(1, 3), Rational(1)},
                          {UPoly({Rational(1), Rational(-3), Rational(0), Rational(2)}),
                           UPoly()});
    const nlohmann::json j = f.to_json();
    CHECK(j["breakpoints"] == nlohmann::json({"0", "1/3", "1"}));
    CHECK(j["pieces"][0]["coeffs"] == nlohmann::json({"1", "-3", "0", "2"}));
    CHECK(j["pieces"][1]["coeffs"] == nlohmann::json({"0"}));
    CHECK(PiecewisePoly::from_json(j) == f);

    const auto parsed = PiecewisePoly::from_json(nlohmann::json::parse(
        R"({"breakpoints": ["0","1/3","1"], "pieces": [{"coeffs": ["1","-3","0","2"]}, {"coeffs": ["0"]}]})"));
    CHECK(parsed == f);
}

TEST_CASE("pretty printing") {
    const PiecewisePoly g({Rational(0), Rational(1, 2), Rational(1)},
                          {UPoly::one_plus(Rational(-2)).pow(3), UPoly()});
    CHECK(g.pretty() == "1 - 6e + 12e^2 - 8e^3 on [0,1/2]; 0 on [1/2,1]");
}
