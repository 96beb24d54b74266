#include "randiv/engine.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace randiv {

namespace {

Rational factorial_rat(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

}  // namespace

RegionSpec RegionSpec::make(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("RegionSpec: need n >= 1 and k >= 1");
    RegionSpec spec{n, k, {}};
    AffineForm f = AffineForm::variable(n, 0);  // x_1 > 0
    spec.constraints.push_back(f.normalized());
    for (int i = 1; i < n; ++i) {
        f = AffineForm::variable(n, i) - AffineForm::variable(n, i - 1);
        spec.constraints.push_back(f.normalized());
    }
    f = AffineForm::constant(n, Rational(1)) - AffineForm::variable(n, n - 1);  // 1 - x_n > 0
    spec.constraints.push_back(f.normalized());
    for (int i = 0; i + k < n; ++i) {
        f = AffineForm::variable(n, i + k) - AffineForm::variable(n, i) - AffineForm::eps(n);
        spec.constraints.push_back(f.normalized());
    }
    return spec;
}

Term build_initial_term(int n, int k) {
    const RegionSpec spec = RegionSpec::make(n, k);
    Term t(MultiPoly::constant(n, Rational(1)));
    for (const auto& f : spec.constraints)
        if (!t.add_constraint(f)) throw std::logic_error("build_initial_term: degenerate region");
    return t;
}

std::vector<SplitCase> split_indicator_product(const Term& t, int var) {
    std::vector<AffineForm> lowers, uppers;
    std::vector<const AffineForm*> rest;
    for (const auto& f : t.constraints()) {
        const Rational& a = f.x_coeff(var);
        if (a.is_zero()) {
            rest.push_back(&f);
            continue;
        }
        if (a.abs() != Rational(1))
            throw std::logic_error("split_indicator_product: variable coefficient not unit");
        // a = +1: f = x_var - alpha, lower bound alpha = x_var - f.
        // a = -1: f = beta - x_var, upper bound beta = x_var + f.
        AffineForm bound = f.scaled(-a);
        bound.set_x_coeff(var, Rational(0));
        (a.sign() > 0 ? lowers : uppers).push_back(std::move(bound));
    }
    if (lowers.empty() || uppers.empty())
        throw std::logic_error("split_indicator_product: variable unbounded below or above");

    std::vector<SplitCase> cases;
    for (std::size_t j = 0; j < lowers.size(); ++j) {
        for (std::size_t i = 0; i < uppers.size(); ++i) {
            Term residual(t.coeff());
            bool alive = true;
            for (const auto* f : rest) alive = alive && residual.add_constraint(*f);
            alive = alive && residual.add_constraint(uppers[i] - lowers[j]);  // guard
            for (std::size_t q = 0; alive && q < lowers.size(); ++q)
                if (q != j) alive = residual.add_constraint(lowers[j] - lowers[q]);
            for (std::size_t s = 0; alive && s < uppers.size(); ++s)
                if (s != i) alive = residual.add_constraint(uppers[s] - uppers[i]);
            if (!alive) continue;
            cases.push_back(SplitCase{lowers[j], uppers[i], std::move(residual)});
        }
    }
    return cases;
}

std::vector<Term> integrate_out(const Term& t, int var) {
    std::vector<Term> out;
    for (auto& c : split_indicator_product(t, var)) {
        MultiPoly integrated = integrate_between(c.residual.coeff(), var, c.lower, c.upper);
        if (integrated.is_zero()) continue;
        if (integrated.involves(var))
            throw std::logic_error("integrate_out: result still involves the variable");
        c.residual.set_coeff(std::move(integrated));
        out.push_back(std::move(c.residual));
    }
    return out;
}

namespace {

// Fourier-Motzkin feasibility of a system of strict affine constraints.
// Variables are eliminated one by one; a strict system is feasible iff no
// non-positive constant form is ever derived. `coeff_of` maps a form to the
// coefficient of the variable currently being eliminated.
bool fm_feasible(std::set<AffineForm> forms, int nx) {
    for (int stage = 0; stage <= nx; ++stage) {
        auto coeff_of = [&](const AffineForm& f) -> const Rational& {
            return stage < nx ? f.x_coeff(stage) : f.eps_coeff();
        };
        std::vector<AffineForm> lows, ups;
        std::set<AffineForm> next;
        for (const auto& f : forms) {
            const int s = coeff_of(f).sign();
            if (s > 0) lows.push_back(f);
            else if (s < 0) ups.push_back(f);
            else next.insert(f);
        }
        for (const auto& lo : lows) {
            for (const auto& up : ups) {
                AffineForm combined =
                    (lo.scaled(-coeff_of(up)) + up.scaled(coeff_of(lo))).normalized();
                if (combined.is_zero()) return false;
                if (combined.is_constant()) {
                    if (combined.constant_part().sign() <= 0) return false;
                    continue;
                }
                next.insert(std::move(combined));
            }
        }
        forms = std::move(next);
    }
    for (const auto& f : forms)
        if (f.constant_part().sign() <= 0) return false;
    return true;
}

}  // namespace

bool prune_infeasible(const Term& t, const std::pair<Rational, Rational>& eps_range) {
    const int nx = t.nx();
    std::set<AffineForm> forms(t.constraints().begin(), t.constraints().end());
    AffineForm lo = AffineForm::eps(nx);
    lo.set_constant(-eps_range.first);
    AffineForm hi = AffineForm::eps(nx).scaled(Rational(-1));
    hi.set_constant(eps_range.second);
    forms.insert(lo.normalized());
    forms.insert(hi.normalized());
    return fm_feasible(std::move(forms), nx);
}

PiecewisePoly assemble_piecewise(const std::vector<Term>& final_terms) {
    struct Event {
        Rational lo, hi;
        UPoly poly;
    };
    std::vector<Event> events;
    std::set<Rational> cuts{Rational(0), Rational(1)};
    for (const auto& t : final_terms) {
        Rational lo(0), hi(1);
        for (const auto& f : t.constraints()) {
            if (!f.is_x_free())
                throw std::logic_error("assemble_piecewise: constraint still involves an x variable");
            const Rational& a = f.eps_coeff();
            const Rational bound = -f.constant_part() / a;  // a*eps + c > 0 at eps = -c/a
            if (a.sign() > 0) lo = std::max(lo, bound);
            else hi = std::min(hi, bound);
        }
        if (!(lo < hi)) continue;
        events.push_back(Event{lo, hi, t.coeff().to_upoly()});
        cuts.insert(lo);
        cuts.insert(hi);
    }
    std::vector<Rational> bps(cuts.begin(), cuts.end());
    std::vector<UPoly> pieces;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        UPoly piece;
        for (const auto& e : events)
            if (e.lo <= bps[i] && bps[i + 1] <= e.hi) piece += e.poly;
        pieces.push_back(std::move(piece));
    }
    return PiecewisePoly(std::move(bps), std::move(pieces));
}

namespace {

using TermMap = std::map<std::vector<AffineForm>, MultiPoly>;

void merge_term(TermMap& into, Term&& t) {
    auto [it, inserted] = into.emplace(t.constraints(), t.coeff());
    if (!inserted) it->second += t.coeff();
}

std::vector<Term> map_to_terms(TermMap&& m) {
    std::vector<Term> out;
    for (auto& [cs, coeff] : m) {
        if (coeff.is_zero()) continue;
        Term t(std::move(coeff));
        for (const auto& f : cs) {
            if (!t.add_constraint(f)) throw std::logic_error("merge: constraint set became degenerate");
        }
        out.push_back(std::move(t));
    }
    return out;
}

int pick_greedy_var(const std::vector<Term>& terms, const std::vector<int>& remaining) {
    int best = remaining.front();
    long best_score = -1;
    for (int v : remaining) {
        long score = 0;
        for (const auto& t : terms) {
            long lows = 0, ups = 0;
            for (const auto& f : t.constraints()) {
                const int s = f.x_coeff(v).sign();
                if (s > 0) ++lows;
                else if (s < 0) ++ups;
            }
            score += lows * ups;
        }
        if (best_score < 0 || score < best_score) {
            best_score = score;
            best = v;
        }
    }
    return best;
}

std::vector<Term> eliminate_all(std::vector<Term> terms, std::vector<int> remaining,
                                const EngineOptions& options,
                                const std::pair<Rational, Rational>& eps_range) {
    while (!remaining.empty()) {
        int var;
        if (options.order == ElimOrder::greedy) {
            var = pick_greedy_var(terms, remaining);
        } else {
            var = remaining.front();
        }
        remaining.erase(std::find(remaining.begin(), remaining.end(), var));

        TermMap merged;
        for (const auto& t : terms) {
            if (!t.constrains(var))
                throw std::logic_error("eliminate_all: live variable without constraints");
            for (auto& out : integrate_out(t, var)) merge_term(merged, std::move(out));
        }
        terms = map_to_terms(std::move(merged));
        if (options.pruning) {
            std::erase_if(terms, [&](const Term& t) { return !prune_infeasible(t, eps_range); });
        }
        if (terms.size() > options.term_budget) {
            std::ostringstream os;
            os << "term budget exceeded: " << terms.size() << " live terms (budget "
               << options.term_budget << "), " << remaining.size() << " variables remaining";
            throw BudgetExceeded(os.str());
        }
    }
    return terms;
}

}  // namespace

PiecewisePoly compute_pnk(int n, int k, const EngineOptions& options) {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    std::vector<Term> terms{build_initial_term(n, k)};
    terms = eliminate_all(std::move(terms), std::move(vars), options,
                          {Rational(0), Rational(1)});
    const Rational nfact = factorial_rat(n);
    for (auto& t : terms) t.set_coeff(t.coeff().scaled(nfact));
    return assemble_piecewise(terms);
}

namespace {

// One summand of the j-times differentiated indicator integral: a rational
// factor times a product of indicators over the still-live variables.
struct DeltaTerm {
    Rational factor;
    std::vector<AffineForm> constraints;  // normalized, sorted, deduplicated
    std::vector<int> live;                // ascending
};

// Substitute eps := 0. Constraints that keep an x part are re-normalized;
// x-free constraints collapse using the eps -> 0+ tie-break (the sign of the
// eps coefficient decides a zero constant). Returns nullopt for a dead term.
std::optional<std::vector<AffineForm>> collapse_eps_to_zero(
    const std::vector<AffineForm>& constraints) {
    std::vector<AffineForm> out;
    for (const auto& f : constraints) {
        if (f.is_x_free()) {
            const int c = f.constant_part().sign();
            if (c > 0) continue;
            if (c < 0) return std::nullopt;
            if (f.eps_coeff().sign() > 0) continue;
            return std::nullopt;
        }
        AffineForm g = f;
        g.set_eps_coeff(Rational(0));
        g = g.normalized();
        if (g.is_zero()) return std::nullopt;
        if (g.is_constant()) {
            if (g.constant_part().sign() > 0) continue;
            return std::nullopt;
        }
        AffineForm neg = -g;
        if (std::binary_search(out.begin(), out.end(), neg)) return std::nullopt;
        auto it = std::lower_bound(out.begin(), out.end(), g);
        if (it == out.end() || !(*it == g)) out.insert(it, std::move(g));
    }
    return out;
}

Rational volume_at_eps_zero(const DeltaTerm& dt, int nx, const EngineOptions& options) {
    auto collapsed = collapse_eps_to_zero(dt.constraints);
    if (!collapsed) return Rational(0);
    Term t(MultiPoly::constant(nx, dt.factor));
    for (const auto& f : *collapsed)
        if (!t.add_constraint(f)) return Rational(0);
    EngineOptions opts = options;
    opts.order = ElimOrder::ascending;
    std::vector<Term> finals = eliminate_all({std::move(t)}, dt.live, opts,
                                             {Rational(0), Rational(1)});
    Rational total(0);
    for (const auto& ft : finals) {
        if (!ft.constraints().empty())
            throw std::logic_error("derivatives_at_zero: residual constraints after elimination");
        total += ft.coeff().to_upoly().eval(Rational(0));
    }
    return total;
}

std::vector<Rational> derivatives_delta(int n, int k, int j_max, const EngineOptions& options) {
    const Term init = build_initial_term(n, k);
    std::map<std::pair<std::vector<AffineForm>, std::vector<int>>, Rational> level;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    level.emplace(std::make_pair(init.constraints(), all), Rational(1));

    const Rational nfact = factorial_rat(n);
    std::vector<Rational> result;
    for (int j = 0; j <= j_max; ++j) {
        if (j > 0) {
            std::map<std::pair<std::vector<AffineForm>, std::vector<int>>, Rational> next;
            for (const auto& [key, factor] : level) {
                const auto& [constraints, live] = key;
                for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
                    const AffineForm& f = constraints[ci];
                    if (f.eps_coeff().is_zero()) continue;
                    // d/d eps 1[f] = (df/d eps) * delta(f); resolve the delta
                    // by eliminating the highest live variable present in f.
                    int var = -1;
                    for (int v : live)
                        if (f.involves_x(v)) var = v;
                    if (var < 0) continue;  // delta in eps alone: vanishes for eps > 0
                    const Rational a = f.x_coeff(var);
                    AffineForm solution = f.scaled(Rational(-1) / a);
                    solution.set_x_coeff(var, Rational(0));
                    Rational factor2 = factor * f.eps_coeff() / a.abs();

                    bool alive = true;
                    std::vector<AffineForm> rest;
                    for (std::size_t cj = 0; alive && cj < constraints.size(); ++cj) {
                        if (cj == ci) continue;
                        AffineForm g = constraints[cj].substituted(var, solution).normalized();
                        if (g.is_zero()) { alive = false; break; }
                        if (g.is_constant()) {
                            if (g.constant_part().sign() > 0) continue;
                            alive = false;
                            break;
                        }
                        rest.push_back(std::move(g));
                    }
                    if (!alive) continue;
                    std::sort(rest.begin(), rest.end());
                    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
                    for (const auto& g : rest)
                        if (std::binary_search(rest.begin(), rest.end(), -g)) { alive = false; break; }
                    if (!alive) continue;

                    std::vector<int> live2;
                    for (int v : live)
                        if (v != var) live2.push_back(v);
                    auto [it, inserted] =
                        next.emplace(std::make_pair(std::move(rest), std::move(live2)), factor2);
                    if (!inserted) it->second += factor2;
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            level = std::move(next);
        }
        Rational value(0);
        for (const auto& [key, factor] : level) {
            DeltaTerm dt{factor, key.first, key.second};
            value += volume_at_eps_zero(dt, n, options);
        }
        result.push_back(value * nfact);
    }
    return result;
}

}  // namespace

std::vector<Rational> derivatives_at_zero(int n, int k, int j_max, DerivBackend backend,
                                          const EngineOptions& options) {
    if (n < 1 || k < 1) throw std::invalid_argument("derivatives_at_zero: need n,k >= 1");
    if (j_max < 0 || j_max > n)
        throw std::invalid_argument("derivatives_at_zero: j_max must be in [0, n]");
    if (backend == DerivBackend::delta) return derivatives_delta(n, k, j_max, options);
    const PiecewisePoly pw = compute_pnk(n, k, options);
    UPoly p = pw.pieces().front();
    std::vector<Rational> result;
    for (int j = 0; j <= j_max; ++j) {
        result.push_back(p.eval(Rational(0)));
        p = p.derivative();
    }
    return result;
}

}  // namespace randiv
