#include <doctest.h>

#include <algorithm>
#include <random>

#include "randiv/closed_forms.hpp"
#include "randiv/engine.hpp"

using namespace randiv;

namespace {

AffineForm var(int nx, int i) { return AffineForm::variable(nx, i); }
AffineForm eps(int nx) { return AffineForm::eps(nx); }
AffineForm cst(int nx, long v) { return AffineForm::constant(nx, Rational(v)); }

Term term_with(MultiPoly coeff, const std::vector<AffineForm>& constraints) {
    Term t(std::move(coeff));
    for (const auto& f : constraints) REQUIRE(t.add_constraint(f));
    return t;
}

bool has_constraint(const Term& t, const AffineForm& f) {
    const AffineForm n = f.normalized();
    return std::find(t.constraints().begin(), t.constraints().end(), n) != t.constraints().end();
}

// Integrates every variable out in the given order and returns the summed
// constant (constraints must be eps-free so that the result is a number).
Rational full_volume(const Term& t, const std::vector<int>& order) {
    std::vector<Term> terms{t};
    for (int v : order) {
        std::vector<Term> next;
        for (const auto& cur : terms)
            for (auto& out : integrate_out(cur, v)) next.push_back(std::move(out));
        terms = std::move(next);
    }
    Rational total(0);
    for (const auto& ft : terms) {
        REQUIRE(ft.constraints().empty());
        total += ft.coeff().to_upoly().eval(Rational(0));
    }
    return total;
}

}  // namespace

TEST_CASE("region constraints for the initial term") {
    const Term t31 = build_initial_term(3, 1);
    CHECK(t31.constraints().size() == 6);  // 4 ordering/boundary + 2 window
    CHECK(has_constraint(t31, var(3, 0)));
    CHECK(has_constraint(t31, var(3, 1) - var(3, 0)));
    CHECK(has_constraint(t31, var(3, 2) - var(3, 1)));
    CHECK(has_constraint(t31, cst(3, 1) - var(3, 2)));
    CHECK(has_constraint(t31, var(3, 1) - var(3, 0) - eps(3)));
    CHECK(has_constraint(t31, var(3, 2) - var(3, 1) - eps(3)));

    const Term t32 = build_initial_term(3, 2);
    CHECK(t32.constraints().size() == 5);
    CHECK(has_constraint(t32, var(3, 2) - var(3, 0) - eps(3)));

    const Term t25 = build_initial_term(2, 5);  // k >= n: orderings only
    CHECK(t25.constraints().size() == 3);

    CHECK_THROWS_AS(build_initial_term(0, 1), std::invalid_argument);
}

TEST_CASE("split with one bound on each side gives the single case") {
    const int nx = 2;
    const Term t = term_with(MultiPoly::constant(nx, Rational(1)),
                             {var(nx, 0), var(nx, 1) - var(nx, 0)});
    const auto cases = split_indicator_product(t, 0);
    REQUIRE(cases.size() == 1);
    CHECK(cases[0].lower == AffineForm(nx));
    CHECK(cases[0].upper == var(nx, 1));
    CHECK(cases[0].residual.constraints().size() == 1);
    CHECK(has_constraint(cases[0].residual, var(nx, 1)));  // guard x_2 > 0
}

TEST_CASE("split with two bounds on each side produces the four selector cases") {
    const int nx = 3;
    // lowers on x_1: x_2 and eps; uppers: x_3 and 1
    const Term t = term_with(MultiPoly::constant(nx, Rational(1)),
                             {var(nx, 0) - var(nx, 1), var(nx, 0) - eps(nx),
                              var(nx, 2) - var(nx, 0), cst(nx, 1) - var(nx, 0)});
    const auto cases = split_indicator_product(t, 0);
    REQUIRE(cases.size() == 4);
    bool found = false;
    for (const auto& c : cases) {
        if (c.lower == var(nx, 1) && c.upper == var(nx, 2)) {
            found = true;
            CHECK(has_constraint(c.residual, var(nx, 1) - eps(nx)));          // alpha_1 - alpha_2
            CHECK(has_constraint(c.residual, cst(nx, 1) - var(nx, 2)));       // beta_2 - beta_1
            CHECK(has_constraint(c.residual, var(nx, 2) - var(nx, 1)));       // guard
            CHECK(c.residual.constraints().size() == 3);
        }
    }
    CHECK(found);
}

TEST_CASE("split rejects unbounded variables") {
    const Term t = term_with(MultiPoly::constant(1, Rational(1)), {var(1, 0)});
    CHECK_THROWS_AS(split_indicator_product(t, 0), std::logic_error);
}

TEST_CASE("integrate_out on the basic shapes") {
    const int nx = 2;
    SUBCASE("unit coefficient, triangle") {
        const Term t = term_with(MultiPoly::constant(nx, Rational(1)),
                                 {var(nx, 0), var(nx, 1) - var(nx, 0)});
        const auto out = integrate_out(t, 0);
        REQUIRE(out.size() == 1);
        CHECK(out[0].coeff() == MultiPoly::from_affine(var(nx, 1)));
        CHECK(out[0].constraints().size() == 1);
        CHECK(has_constraint(out[0], var(nx, 1)));
    }
    SUBCASE("eps-shifted bounds") {
        const Term t = term_with(MultiPoly::constant(nx, Rational(1)),
                                 {var(nx, 0) - eps(nx), var(nx, 1) - var(nx, 0) - eps(nx)});
        const auto out = integrate_out(t, 0);
        REQUIRE(out.size() == 1);
        CHECK(out[0].coeff() ==
              MultiPoly::from_affine(var(nx, 1) - eps(nx).scaled(Rational(2))));
        CHECK(has_constraint(out[0], var(nx, 1) - eps(nx).scaled(Rational(2))));
    }
    SUBCASE("linear coefficient over the unit interval") {
        const Term t = term_with(MultiPoly::from_affine(var(nx, 1)),
                                 {var(nx, 1), cst(nx, 1) - var(nx, 1)});
        const auto out = integrate_out(t, 1);
        REQUIRE(out.size() == 1);
        CHECK(out[0].coeff() == MultiPoly::constant(nx, Rational(1, 2)));
        CHECK(out[0].constraints().empty());
    }
}

TEST_CASE("feasibility pruning is exact") {
    const int nx = 2;
    Term t(MultiPoly::constant(nx, Rational(1)));
    REQUIRE(t.add_constraint(var(nx, 1) - eps(nx).scaled(Rational(2))));
    REQUIRE(t.add_constraint(cst(nx, 1) - var(nx, 1)));
    CHECK(prune_infeasible(t, {Rational(0), Rational(1, 2)}));
    CHECK_FALSE(prune_infeasible(t, {Rational(1, 2), Rational(1)}));
    CHECK(prune_infeasible(t, {Rational(0), Rational(1)}));

    // {x_1 > 0, -x_1 > 0} dies at construction (negation pair)
    Term dead(MultiPoly::constant(nx, Rational(1)));
    REQUIRE(dead.add_constraint(var(nx, 0)));
    CHECK_FALSE(dead.add_constraint(-var(nx, 0)));
}

TEST_CASE("assemble_piecewise intersects eps intervals and merges") {
    const int nx = 1;
    // eps^2 valid below 1/2, plus 1 - eps everywhere
    MultiPoly eps_sq = MultiPoly::from_affine(eps(nx)) * MultiPoly::from_affine(eps(nx));
    Term a(eps_sq);
    REQUIRE(a.add_constraint(cst(nx, 1) - eps(nx).scaled(Rational(2))));
    Term b(MultiPoly::from_affine(cst(nx, 1) - eps(nx)));

    const PiecewisePoly pw = assemble_piecewise({a, b});
    CHECK(pw.breakpoints() == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
    CHECK(pw.pieces()[0] == UPoly({Rational(1), Rational(-1), Rational(1)}));
    CHECK(pw.pieces()[1] == UPoly({Rational(1), Rational(-1)}));

    // a contradictory eps interval contributes nothing
    Term c(MultiPoly::constant(nx, Rational(7)));
    REQUIRE(c.add_constraint(eps(nx) - cst(nx, 1).scaled(Rational(3, 4))));  // eps > 3/4
    REQUIRE(c.add_constraint(cst(nx, 1).scaled(Rational(1, 4)) - eps(nx)));  // eps < 1/4
    const PiecewisePoly pw2 = assemble_piecewise({b, c});
    CHECK(pw2.pieces().size() == 1);
    CHECK(pw2.pieces()[0] == UPoly({Rational(1), Rational(-1)}));

    // x-involving constraints signal a pipeline bug
    Term d(MultiPoly::constant(nx, Rational(1)));
    REQUIRE(d.add_constraint(var(nx, 0)));
    CHECK_THROWS_AS(assemble_piecewise({d}), std::logic_error);
}

TEST_CASE("compute_pnk reproduces the known families") {
    CHECK(compute_pnk(3, 1) == p_n1(3));
    CHECK(compute_pnk(3, 1).pretty() == "1 - 6e + 12e^2 - 8e^3 on [0,1/2]; 0 on [1/2,1]");

    const PiecewisePoly p32 = compute_pnk(3, 2);
    CHECK(p32.breakpoints() == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(p32.pieces()[0] == UPoly({Rational(1), Rational(0), Rational(-3), Rational(2)}));

    // k >= n: no window constraint can fail
    const PiecewisePoly p25 = compute_pnk(2, 5);
    CHECK(p25.pieces().size() == 1);
    CHECK(p25.pieces()[0] == UPoly::constant(Rational(1)));

    // final-range piece of (4,2)
    const PiecewisePoly p42 = compute_pnk(4, 2);
    CHECK(p42.eval(Rational(3, 4)) == p_2m_2(2).poly.eval(Rational(3, 4)));
    CHECK(p42.pieces().back() == p_2m_2(2).poly);
}

TEST_CASE("pruning and elimination order do not change the result") {
    EngineOptions no_prune;
    no_prune.pruning = false;
    EngineOptions greedy;
    greedy.order = ElimOrder::greedy;
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 3}, {5, 2}}) {
        const PiecewisePoly base = compute_pnk(n, k);
        CHECK(compute_pnk(n, k, no_prune) == base);
        CHECK(compute_pnk(n, k, greedy) == base);
    }
}

TEST_CASE("term budget aborts cleanly and names the budget") {
    EngineOptions tiny;
    tiny.term_budget = 1;
    try {
        compute_pnk(5, 2, tiny);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        const std::string msg = e.what();
        CHECK(msg.find("term budget") != std::string::npos);
        CHECK(msg.find("remaining") != std::string::npos);
    }
}

TEST_CASE("splitting covers the region: volume sandwich on random systems") {
    std::mt19937_64 rng(23);
    const int nx = 2;
    const int grid = 16;
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<AffineForm> cons = {var(nx, 0), cst(nx, 1) - var(nx, 0), var(nx, 1),
                                        cst(nx, 1) - var(nx, 1)};
        // extra constraints stay in the difference form +-x_i -+ x_j + c that
        // the splitter's unit-coefficient precondition covers
        const int extra = 1 + static_cast<int>(rng() % 2);
        for (int e = 0; e < extra; ++e) {
            static const std::pair<int, int> patterns[] = {{1, -1}, {-1, 1}, {1, 0},
                                                           {-1, 0}, {0, 1},  {0, -1}};
            const auto& [s, t] = patterns[rng() % 6];
            AffineForm f(nx);
            f.set_x_coeff(0, Rational(s));
            f.set_x_coeff(1, Rational(t));
            f.set_constant(Rational(static_cast<long>(rng() % 3) - 1));
            cons.push_back(f);
        }
        Term t(MultiPoly::constant(nx, Rational(1)));
        bool alive = true;
        for (const auto& f : cons) alive = alive && t.add_constraint(f);

        const Rational volume = alive ? full_volume(t, {0, 1}) : Rational(0);
        if (alive) CHECK(volume == full_volume(t, {1, 0}));  // order invariance

        Rational inner(0), outer(0);
        const Rational cell = Rational(1, grid) * Rational(1, grid);
        for (int i = 0; i < grid; ++i) {
            for (int j = 0; j < grid; ++j) {
                bool all_corners_in = true, fully_out = false;
                for (const auto& f : cons) {
                    int pos = 0, nonpos = 0;
                    for (int dx = 0; dx <= 1; ++dx)
                        for (int dy = 0; dy <= 1; ++dy) {
                            Rational v = f.constant_part() +
                                         f.x_coeff(0) * Rational(i + dx, grid) +
                                         f.x_coeff(1) * Rational(j + dy, grid);
                            (v.sign() > 0 ? pos : nonpos)++;
                        }
                    if (pos < 4) all_corners_in = false;
                    if (nonpos == 4) fully_out = true;
                }
                if (all_corners_in) inner += cell;
                if (!fully_out) outer += cell;
            }
        }
        CHECK(inner <= volume);
        CHECK(volume <= outer);
    }
}
