#include "randiv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace randiv {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(const std::string& text) {
    // explicit base 10: the default mpz string base treats "025" as octal
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    Integer num(text.substr(0, slash), 10);
    Integer den(text.substr(slash + 1), 10);
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(unsigned long e) const {
    Rational r;
    mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace randiv
