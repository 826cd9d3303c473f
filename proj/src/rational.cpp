#include "psl/rational.hpp"

#include <stdexcept>

namespace psl {

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    mpz_class num, den(1);
    if (slash == std::string::npos) {
        num = mpz_class(text);
    } else {
        num = mpz_class(text.substr(0, slash));
        den = mpz_class(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    }
    return Rational(num, den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

long mpz_valuation(const mpz_class& n, long p) {
    if (n == 0) throw std::domain_error("mpz_valuation: zero input");
    mpz_class rest, pz(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

long Rational::valuation(long p) const {
    if (is_zero()) throw std::domain_error("Rational::valuation: zero input");
    return mpz_valuation(q_.get_num(), p) - mpz_valuation(q_.get_den(), p);
}

std::string Rational::encode() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace psl
