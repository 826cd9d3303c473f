#include "psl/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "psl/numutil.hpp"

namespace psl {

namespace {

mpz_class pk_pow(long p, long k) {
    mpz_class r, b(p);
    if (k < 0) throw std::logic_error("pk_pow: negative exponent");
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

mpz_class mod_reduce(const mpz_class& x, const mpz_class& m) {
    mpz_class r = x % m;
    if (r < 0) r += m;
    return r;
}

mpz_class mod_inverse(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: not invertible");
    return r;
}

} // namespace

ZmodPk::ZmodPk(long p, int k, const mpz_class& r) : p_(p), k_(k) {
    if (k < 1) throw std::invalid_argument("ZmodPk: k must be >= 1");
    pk_ = pk_pow(p, k);
    r_ = mod_reduce(r, pk_);
}

void ZmodPk::check(const ZmodPk& o) const {
    if (p_ != o.p_ || k_ != o.k_) throw std::invalid_argument("ZmodPk: modulus mismatch");
}

ZmodPk ZmodPk::operator+(const ZmodPk& o) const { check(o); return ZmodPk(p_, k_, r_ + o.r_); }
ZmodPk ZmodPk::operator-(const ZmodPk& o) const { check(o); return ZmodPk(p_, k_, r_ - o.r_); }
ZmodPk ZmodPk::operator*(const ZmodPk& o) const { check(o); return ZmodPk(p_, k_, r_ * o.r_); }

ZmodPk ZmodPk::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class r;
    mpz_powm(r.get_mpz_t(), r_.get_mpz_t(), e.get_mpz_t(), pk_.get_mpz_t());
    return ZmodPk(p_, k_, r);
}

ZmodPk ZmodPk::inverse() const { return ZmodPk(p_, k_, mod_inverse(r_, pk_)); }

bool ZmodPk::operator==(const ZmodPk& o) const {
    return p_ == o.p_ && k_ == o.k_ && r_ == o.r_;
}

PadicApprox PadicApprox::exact_zero(long p) {
    PadicApprox z;
    z.p_ = p;
    return z;
}

PadicApprox PadicApprox::zero_to_precision(long p, long abs_prec) {
    PadicApprox z;
    z.state_ = State::ZeroToPrecision;
    z.p_ = p;
    z.val_ = abs_prec;
    return z;
}

PadicApprox PadicApprox::from_parts(long p, long valuation, const mpz_class& unit, int relprec) {
    if (p < 3) throw std::invalid_argument("PadicApprox: p must be an odd prime");
    if (relprec < 1) throw std::invalid_argument("PadicApprox: relprec must be >= 1");
    mpz_class pr = pk_pow(p, relprec);
    mpz_class u = mod_reduce(unit, pr);
    if (u == 0) return zero_to_precision(p, valuation + relprec);
    long e = mpz_valuation(u, p);
    if (e > 0) {
        // the residue carries p-powers: fold them into the valuation
        mpz_class pe = pk_pow(p, e);
        u /= pe;
        valuation += e;
        relprec -= static_cast<int>(e);
        u = mod_reduce(u, pk_pow(p, relprec));
        if (u == 0) return zero_to_precision(p, valuation + relprec);
    }
    PadicApprox x;
    x.state_ = State::Nonzero;
    x.p_ = p;
    x.val_ = valuation;
    x.unit_ = u;
    x.relprec_ = relprec;
    return x;
}

PadicApprox PadicApprox::one(long p, int relprec) { return from_parts(p, 0, 1, relprec); }

PadicApprox PadicApprox::of_integer(const mpz_class& n, long p, int relprec) {
    return padic_of_rational(Rational(n), p, relprec);
}

long PadicApprox::valuation() const {
    if (state_ == State::ExactZero)
        throw std::domain_error("PadicApprox: exact zero has infinite valuation");
    return val_;
}

const mpz_class& PadicApprox::unit() const {
    if (state_ != State::Nonzero) throw std::domain_error("PadicApprox: no unit part");
    return unit_;
}

void PadicApprox::check_compatible(const PadicApprox& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
        throw std::invalid_argument("PadicApprox: prime mismatch");
}

PadicApprox PadicApprox::operator-() const {
    if (state_ != State::Nonzero) return *this;
    return from_parts(p_, val_, pk_pow(p_, relprec_) - unit_, relprec_);
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    check_compatible(o);
    if (state_ == State::ExactZero) return o;
    if (o.state_ == State::ExactZero) return *this;
    if (state_ == State::ZeroToPrecision && o.state_ == State::ZeroToPrecision)
        return zero_to_precision(p_, std::min(val_, o.val_));
    if (state_ == State::ZeroToPrecision || o.state_ == State::ZeroToPrecision) {
        const PadicApprox& z = state_ == State::ZeroToPrecision ? *this : o;
        const PadicApprox& x = state_ == State::ZeroToPrecision ? o : *this;
        long abs = std::min(z.val_, x.val_ + x.relprec_);
        if (x.val_ >= abs) return zero_to_precision(p_, abs);
        return from_parts(p_, x.val_, x.unit_, static_cast<int>(abs - x.val_));
    }
    long abs = std::min(val_ + relprec_, o.val_ + o.relprec_);
    long v = std::min(val_, o.val_);
    if (v >= abs) return zero_to_precision(p_, abs);
    mpz_class m = pk_pow(p_, abs - v);
    mpz_class w = mod_reduce(unit_ * pk_pow(p_, val_ - v) + o.unit_ * pk_pow(p_, o.val_ - v), m);
    if (w == 0) return zero_to_precision(p_, abs);
    return from_parts(p_, v, w, static_cast<int>(abs - v));
}

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    check_compatible(o);
    if (state_ == State::ExactZero || o.state_ == State::ExactZero)
        return exact_zero(p_ != 0 ? p_ : o.p_);
    if (state_ == State::ZeroToPrecision || o.state_ == State::ZeroToPrecision) {
        // v(xy) >= bound(x) + val-or-bound(y)
        return zero_to_precision(p_, val_ + o.val_);
    }
    int r = std::min(relprec_, o.relprec_);
    return from_parts(p_, val_ + o.val_, mod_reduce(unit_ * o.unit_, pk_pow(p_, r)), r);
}

PadicApprox PadicApprox::inverse() const {
    if (state_ == State::ExactZero)
        throw std::domain_error("PadicApprox: division by exact zero");
    if (state_ == State::ZeroToPrecision)
        throw std::domain_error("PadicApprox: cannot invert a value known only as zero-to-precision");
    mpz_class pr = pk_pow(p_, relprec_);
    return from_parts(p_, -val_, mod_inverse(unit_, pr), relprec_);
}

PadicApprox PadicApprox::operator/(const PadicApprox& o) const {
    check_compatible(o);
    if (o.state_ == State::ExactZero)
        throw std::domain_error("PadicApprox: division by exact zero");
    if (o.state_ == State::ZeroToPrecision)
        throw std::domain_error("PadicApprox: division by zero-to-precision value");
    if (state_ == State::ExactZero) return *this;
    if (state_ == State::ZeroToPrecision) return zero_to_precision(p_, val_ - o.val_);
    return *this * o.inverse();
}

PadicApprox PadicApprox::reduced_to(int relprec) const {
    if (state_ != State::Nonzero || relprec >= relprec_) return *this;
    return from_parts(p_, val_, mod_reduce(unit_, pk_pow(p_, relprec)), relprec);
}

bool PadicApprox::operator==(const PadicApprox& o) const {
    if (state_ != o.state_ || p_ != o.p_) return false;
    switch (state_) {
        case State::ExactZero: return true;
        case State::ZeroToPrecision: return val_ == o.val_;
        case State::Nonzero:
            return val_ == o.val_ && relprec_ == o.relprec_ && unit_ == o.unit_;
    }
    return false;
}

bool PadicApprox::agrees_to(const PadicApprox& o, int digits) const {
    PadicApprox d = *this - o;
    if (d.is_exact_zero()) return true;
    return d.val_ >= digits;
}

std::string PadicApprox::describe() const {
    std::ostringstream os;
    switch (state_) {
        case State::ExactZero: os << "0 (exact)"; break;
        case State::ZeroToPrecision: os << "O(" << p_ << "^" << val_ << ")"; break;
        case State::Nonzero:
            os << p_ << "^" << val_ << " * " << unit_.get_str()
               << " + O(" << p_ << "^" << val_ + relprec_ << ")";
            break;
    }
    return os.str();
}

PadicApprox padic_of_rational(const Rational& q, long p, int relprec) {
    if (!is_odd_prime(p)) throw std::invalid_argument("padic_of_rational: p must be an odd prime");
    if (q.is_zero()) return PadicApprox::exact_zero(p);
    mpz_class num = q.numerator(), den = q.denominator();
    long a = mpz_valuation(num, p), b = mpz_valuation(den, p);
    mpz_class pa = pk_pow(p, a), pb = pk_pow(p, b);
    num /= pa;
    den /= pb;
    mpz_class pr = pk_pow(p, relprec);
    mpz_class u = mod_reduce(num, pr) * mod_inverse(mod_reduce(den, pr), pr);
    return PadicApprox::from_parts(p, a - b, u, relprec);
}

PadicApprox padic_arith(const PadicApprox& x, const PadicApprox& y, PadicOp op) {
    switch (op) {
        case PadicOp::Add: return x + y;
        case PadicOp::Mul: return x * y;
        case PadicOp::Div: return x / y;
    }
    throw std::logic_error("padic_arith: bad op");
}

} // namespace psl
