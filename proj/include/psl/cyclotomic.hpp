#pragma once

#include <string>
#include <vector>

#include "psl/rational.hpp"

namespace psl {

/* Element of Q(zeta_m), stored as the residue representative of degree
 * < phi(m) modulo the m-th cyclotomic polynomial. Coefficients ascending:
 * coeffs[j] multiplies zeta_m^j. Immutable value semantics; every
 * arithmetic result is reduced mod Phi_m. */
class CyclotomicNumber {
public:
    CyclotomicNumber() : conductor_(1), coeffs_(1) {}
    CyclotomicNumber(long conductor, std::vector<Rational> coeffs);

    static CyclotomicNumber zero(long conductor);
    static CyclotomicNumber one(long conductor);
    static CyclotomicNumber from_rational(long conductor, const Rational& x);
    // zeta_m^e reduced mod Phi_m (e may be any integer).
    static CyclotomicNumber root_power(long conductor, long e);
    static CyclotomicNumber parse(long conductor, const std::string& text);

    long conductor() const { return conductor_; }
    long degree() const { return static_cast<long>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // The coefficient of zeta^0; whole value if is_rational().
    Rational rational_part() const { return coeffs_[0]; }

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }

    CyclotomicNumber scaled(const Rational& c) const;
    CyclotomicNumber inverse() const;

    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    // "[c0, c1, ...]" with rational entries.
    std::string encode() const;

private:
    long conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor)
    void check_same_field(const CyclotomicNumber& o) const;
    CyclotomicNumber aligned_to(const CyclotomicNumber& o) const;
};

CyclotomicNumber cyclo_mul(const CyclotomicNumber& x, const CyclotomicNumber& y);
CyclotomicNumber cyclo_inverse(const CyclotomicNumber& x);

} // namespace psl
