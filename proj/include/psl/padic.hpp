#pragma once

#include <gmpxx.h>
#include <string>

#include "psl/rational.hpp"

namespace psl {

/* Residue ring Z/p^k with k tracked explicitly. */
class ZmodPk {
public:
    ZmodPk() : p_(0), k_(0), r_(0), pk_(1) {}
    ZmodPk(long p, int k, const mpz_class& r);

    long p() const { return p_; }
    int k() const { return k_; }
    const mpz_class& residue() const { return r_; }
    const mpz_class& modulus() const { return pk_; }

    ZmodPk operator+(const ZmodPk& o) const;
    ZmodPk operator-(const ZmodPk& o) const;
    ZmodPk operator*(const ZmodPk& o) const;
    ZmodPk pow(const mpz_class& e) const;
    ZmodPk inverse() const;

    bool operator==(const ZmodPk& o) const;

private:
    long p_;
    int k_;
    mpz_class r_, pk_;
    void check(const ZmodPk& o) const;
};

/* Element of Q_p known to finite precision: p^valuation * unit + O(p^{valuation+relprec}),
 * with unit in [1, p^relprec) coprime to p. Three states:
 *   - exact zero (valuation +infinity),
 *   - zero to known precision only (valuation >= bound, no unit information),
 *   - nonzero with explicit valuation/unit/relprec.
 * Negative valuations are first-class. */
class PadicApprox {
public:
    static constexpr int kDefaultRelPrec = 12;

    enum class State { ExactZero, ZeroToPrecision, Nonzero };

    PadicApprox() : state_(State::ExactZero), p_(0), val_(0), relprec_(0) {}

    static PadicApprox exact_zero(long p = 0);
    // "zero mod p^abs_prec": valuation >= abs_prec, nothing else known.
    static PadicApprox zero_to_precision(long p, long abs_prec);
    static PadicApprox from_parts(long p, long valuation, const mpz_class& unit, int relprec);
    static PadicApprox one(long p, int relprec = kDefaultRelPrec);
    static PadicApprox of_integer(const mpz_class& n, long p, int relprec = kDefaultRelPrec);

    State state() const { return state_; }
    bool is_exact_zero() const { return state_ == State::ExactZero; }
    bool is_zero_to_precision() const { return state_ == State::ZeroToPrecision; }
    bool is_nonzero() const { return state_ == State::Nonzero; }
    // Generic additive-identity probe (exact zero only).
    bool is_zero() const { return is_exact_zero(); }

    long p() const { return p_; }
    // Nonzero: the exact valuation. ZeroToPrecision: the lower bound.
    long valuation() const;
    const mpz_class& unit() const;
    int relprec() const { return relprec_; }

    PadicApprox operator-() const;
    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const { return *this + (-o); }
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator/(const PadicApprox& o) const;
    PadicApprox inverse() const;

    // Forget precision beyond the given relative precision.
    PadicApprox reduced_to(int relprec) const;

    // Exact structural equality (state, valuation, unit, relprec).
    bool operator==(const PadicApprox& o) const;
    bool operator!=(const PadicApprox& o) const { return !(*this == o); }
    // Same value modulo p^{min valuation + digits}.
    bool agrees_to(const PadicApprox& o, int digits) const;

    std::string describe() const;

private:
    State state_;
    long p_;
    long val_; // Nonzero: valuation; ZeroToPrecision: lower bound on valuation
    mpz_class unit_;
    int relprec_;
    void check_compatible(const PadicApprox& o) const;
};

PadicApprox padic_of_rational(const Rational& q, long p,
                              int relprec = PadicApprox::kDefaultRelPrec);

enum class PadicOp { Add, Mul, Div };
PadicApprox padic_arith(const PadicApprox& x, const PadicApprox& y, PadicOp op);

} // namespace psl
