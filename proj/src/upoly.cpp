#include "randiv/upoly.hpp"

#include <sstream>

namespace randiv {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(Rational c) { return UPoly({std::move(c)}); }

UPoly UPoly::one_plus(Rational c) { return UPoly({Rational(1), std::move(c)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
    return c_[d];
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& c : r) c *= s;
    return UPoly(std::move(r));
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r = UPoly::constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        const Rational& c = c_[d];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (d == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str();
            os << "e";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace randiv
