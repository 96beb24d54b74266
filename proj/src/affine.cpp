#include "randiv/affine.hpp"

#include <sstream>
#include <stdexcept>

namespace randiv {

AffineForm AffineForm::constant(int nx, Rational c) {
    AffineForm f(nx);
    f.constant_ = std::move(c);
    return f;
}

AffineForm AffineForm::variable(int nx, int var) {
    AffineForm f(nx);
    f.x_.at(var) = Rational(1);
    return f;
}

AffineForm AffineForm::eps(int nx) {
    AffineForm f(nx);
    f.eps_ = Rational(1);
    return f;
}

bool AffineForm::is_zero() const {
    if (!constant_.is_zero() || !eps_.is_zero()) return false;
    for (const auto& c : x_)
        if (!c.is_zero()) return false;
    return true;
}

bool AffineForm::is_constant() const {
    if (!eps_.is_zero()) return false;
    for (const auto& c : x_)
        if (!c.is_zero()) return false;
    return true;
}

bool AffineForm::is_x_free() const {
    for (const auto& c : x_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void check_arity(const AffineForm& a, const AffineForm& b) {
    if (a.nx() != b.nx()) throw std::invalid_argument("AffineForm: arity mismatch");
}

}  // namespace

AffineForm AffineForm::operator+(const AffineForm& o) const {
    check_arity(*this, o);
    AffineForm f(*this);
    f.constant_ += o.constant_;
    f.eps_ += o.eps_;
    for (int i = 0; i < nx(); ++i) f.x_[i] += o.x_[i];
    return f;
}

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + (-o); }

AffineForm AffineForm::operator-() const { return scaled(Rational(-1)); }

AffineForm AffineForm::scaled(const Rational& s) const {
    AffineForm f(*this);
    f.constant_ *= s;
    f.eps_ *= s;
    for (auto& c : f.x_) c *= s;
    return f;
}

AffineForm AffineForm::normalized() const {
    Integer g(0), l(1);
    auto fold = [&](const Rational& c) {
        if (c.is_zero()) return;
        Integer num = c.num(), den = c.den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    };
    fold(constant_);
    fold(eps_);
    for (const auto& c : x_) fold(c);
    if (sgn(g) == 0) return *this;  // zero form
    return scaled(Rational(l, g));
}

AffineForm AffineForm::substituted(int var, const AffineForm& repl) const {
    check_arity(*this, repl);
    if (!repl.x_.at(var).is_zero())
        throw std::invalid_argument("AffineForm: substitution expression involves the variable");
    const Rational a = x_.at(var);
    if (a.is_zero()) return *this;
    AffineForm f(*this);
    f.x_[var] = Rational(0);
    return f + repl.scaled(a);
}

Rational AffineForm::eval_x_free(const Rational& eps_value) const {
    if (!is_x_free()) throw std::invalid_argument("AffineForm: form involves x variables");
    return constant_ + eps_ * eps_value;
}

std::strong_ordering AffineForm::operator<=>(const AffineForm& o) const {
    if (auto c = nx() <=> o.nx(); c != 0) return c;
    if (auto c = constant_ <=> o.constant_; c != 0) return c;
    if (auto c = eps_ <=> o.eps_; c != 0) return c;
    for (int i = 0; i < nx(); ++i)
        if (auto c = x_[i] <=> o.x_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string AffineForm::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& sym) {
        if (c.is_zero()) return;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (sym.empty()) os << a.str();
        else if (a == Rational(1)) os << sym;
        else os << a.str() << sym;
    };
    for (int i = 0; i < nx(); ++i) emit(x_[i], "x" + std::to_string(i + 1));
    emit(eps_, "e");
    emit(constant_, "");
    if (first) os << "0";
    return os.str();
}

}  // namespace randiv
