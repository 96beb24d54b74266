#include "randiv/multipoly.hpp"

#include <stdexcept>

namespace randiv {

MultiPoly MultiPoly::constant(int nx, Rational c) {
    MultiPoly p(nx);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nx + 1, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::from_affine(const AffineForm& f) {
    const int nx = f.nx();
    MultiPoly p(nx);
    if (!f.constant_part().is_zero()) p.terms_.emplace(Monomial(nx + 1, 0), f.constant_part());
    if (!f.eps_coeff().is_zero()) {
        Monomial m(nx + 1, 0);
        m[nx] = 1;
        p.terms_.emplace(std::move(m), f.eps_coeff());
    }
    for (int i = 0; i < nx; ++i) {
        if (f.x_coeff(i).is_zero()) continue;
        Monomial m(nx + 1, 0);
        m[i] = 1;
        p.terms_.emplace(std::move(m), f.x_coeff(i));
    }
    return p;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::involves(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] != 0) return true;
    return false;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

void check_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.nx() != b.nx()) throw std::invalid_argument("MultiPoly: arity mismatch");
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_arity(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_arity(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_arity(*this, o);
    MultiPoly r(nx_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(m1);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly r(nx_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

MultiPoly MultiPoly::antiderivative(int var) const {
    MultiPoly r(nx_);
    for (const auto& [m, c] : terms_) {
        Monomial m2(m);
        m2[var] += 1;
        r.terms_.emplace(std::move(m2), c / Rational(static_cast<long>(m[var]) + 1));
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nx_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial m2(m);
        m2[var] -= 1;
        r.add_term(m2, c * Rational(static_cast<long>(m[var])));
    }
    return r;
}

MultiPoly MultiPoly::substituted(int var, const AffineForm& repl) const {
    if (repl.nx() != nx_) throw std::invalid_argument("MultiPoly: arity mismatch");
    const bool repl_has_var = var == eps_slot() ? !repl.eps_coeff().is_zero()
                                                : !repl.x_coeff(var).is_zero();
    if (repl_has_var)
        throw std::invalid_argument("MultiPoly: substitution expression involves the variable");
    const MultiPoly base = MultiPoly::from_affine(repl);
    std::vector<MultiPoly> powers{MultiPoly::constant(nx_, Rational(1))};
    MultiPoly r(nx_);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m[var];
        while (powers.size() <= e) powers.push_back(powers.back() * base);
        Monomial rest(m);
        rest[var] = 0;
        for (const auto& [pm, pc] : powers[e].terms()) {
            Monomial m2(rest);
            for (std::size_t i = 0; i < m2.size(); ++i) m2[i] += pm[i];
            r.add_term(m2, c * pc);
        }
    }
    return r;
}

UPoly MultiPoly::to_upoly() const {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < nx_; ++i)
            if (m[i] != 0) throw std::invalid_argument("MultiPoly: not eps-only");
        const std::uint32_t d = m[nx_];
        if (coeffs.size() <= d) coeffs.resize(d + 1, Rational(0));
        coeffs[d] = c;
    }
    return UPoly(std::move(coeffs));
}

MultiPoly integrate_between(const MultiPoly& p, int var, const AffineForm& lower,
                            const AffineForm& upper) {
    if (lower.nx() != p.nx() || upper.nx() != p.nx())
        throw std::invalid_argument("integrate_between: arity mismatch");
    if (var < 0 || var >= p.nx())
        throw std::invalid_argument("integrate_between: variable index out of range");
    if (lower.involves_x(var) || upper.involves_x(var))
        throw std::invalid_argument("integrate_between: bound involves the integration variable");
    const MultiPoly anti = p.antiderivative(var);
    return anti.substituted(var, upper) - anti.substituted(var, lower);
}

}  // namespace randiv
