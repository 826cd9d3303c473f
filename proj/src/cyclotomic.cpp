#include "psl/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "psl/numutil.hpp"

namespace psl {

namespace {

using Poly = std::vector<Rational>; // ascending, may carry trailing zeros

long poly_degree(const Poly& f) {
    for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i)
        if (!f[i].is_zero()) return i;
    return -1;
}

Poly poly_mul(const Poly& f, const Poly& g) {
    Poly h(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        for (size_t j = 0; j < g.size(); ++j) {
            if (g[j].is_zero()) continue;
            h[i + j] += f[i] * g[j];
        }
    }
    return h;
}

// Remainder of f modulo the monic modulus.
Poly poly_mod(Poly f, const Poly& modulus) {
    long dm = poly_degree(modulus);
    for (long i = poly_degree(f); i >= dm; --i) {
        if (f[i].is_zero()) continue;
        Rational c = f[i];
        for (long j = 0; j <= dm; ++j) f[i - dm + j] -= c * modulus[j];
    }
    f.resize(dm);
    return f;
}

Poly rational_poly(const std::vector<mpz_class>& f) {
    Poly g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = Rational(f[i]);
    return g;
}

const Poly& phi_poly(long m) {
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, rational_poly(cyclotomic_polynomial(m))).first;
    return it->second;
}

// Extended Euclid over Q[X]: returns u with u*f = gcd(f, g) mod g,
// where gcd is normalized to 1 (f, g coprime in our usage).
Poly poly_inverse_mod(const Poly& f, const Poly& g) {
    // standard iterative extended gcd on (r0, r1) = (g, f)
    Poly r0 = g, r1 = f;
    Poly s0(1), s1(1);
    s0[0] = Rational(0);
    s1[0] = Rational(1);
    while (poly_degree(r1) >= 0) {
        long d0 = poly_degree(r0), d1 = poly_degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // one reduction step: r0 -= (lead0/lead1) X^{d0-d1} r1
        Rational c = r0[d0] / r1[d1];
        long shift = d0 - d1;
        for (long i = 0; i <= d1; ++i) r0[i + shift] -= c * r1[i];
        Poly snew(std::max(s0.size(), s1.size() + shift));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < s1.size(); ++i) snew[i + shift] -= c * s1[i];
        s0 = snew;
        if (poly_degree(r0) < poly_degree(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    long d = poly_degree(r0);
    if (d != 0) throw std::domain_error("poly_inverse_mod: inputs not coprime");
    Rational lead = r0[d];
    Poly u(s0.size());
    for (size_t i = 0; i < s0.size(); ++i) u[i] = s0[i] / lead;
    return u;
}

} // namespace

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    long deg = euler_phi(conductor);
    if (static_cast<long>(coeffs_.size()) != deg)
        throw std::invalid_argument("CyclotomicNumber: coefficient count must equal phi(m)");
}

CyclotomicNumber CyclotomicNumber::zero(long conductor) {
    return CyclotomicNumber(conductor, std::vector<Rational>(euler_phi(conductor)));
}

CyclotomicNumber CyclotomicNumber::one(long conductor) {
    return from_rational(conductor, Rational(1));
}

CyclotomicNumber CyclotomicNumber::from_rational(long conductor, const Rational& x) {
    std::vector<Rational> c(euler_phi(conductor));
    c[0] = x;
    return CyclotomicNumber(conductor, std::move(c));
}

CyclotomicNumber CyclotomicNumber::root_power(long conductor, long e) {
    long m = conductor;
    e = ((e % m) + m) % m;
    Poly x(e + 1);
    x[e] = Rational(1);
    Poly r = poly_mod(std::move(x), phi_poly(m));
    r.resize(euler_phi(m));
    return CyclotomicNumber(m, std::move(r));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const {
    if (conductor_ != o.conductor_)
        throw std::invalid_argument("CyclotomicNumber: conductor mismatch");
}

// Purely rational values live in every Q(zeta_m); lift them into the other
// operand's field. Genuine cross-field arithmetic stays an error.
CyclotomicNumber CyclotomicNumber::aligned_to(const CyclotomicNumber& o) const {
    if (conductor_ == o.conductor_) return *this;
    if (is_rational()) return from_rational(o.conductor_, rational_part());
    check_same_field(o);
    return *this; // unreachable
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    if (conductor_ != o.conductor_) {
        if (is_rational()) return aligned_to(o) + o;
        return *this + o.aligned_to(*this);
    }
    auto c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    if (conductor_ != o.conductor_) {
        if (is_rational()) return aligned_to(o) - o;
        return *this - o.aligned_to(*this);
    }
    auto c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    if (conductor_ != o.conductor_) {
        if (is_rational()) return aligned_to(o) * o;
        return *this * o.aligned_to(*this);
    }
    Poly h = poly_mod(poly_mul(coeffs_, o.coeffs_), phi_poly(conductor_));
    h.resize(coeffs_.size());
    return CyclotomicNumber(conductor_, std::move(h));
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& c) const {
    auto v = coeffs_;
    for (auto& x : v) x *= c;
    return CyclotomicNumber(conductor_, std::move(v));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
    Poly u = poly_inverse_mod(coeffs_, phi_poly(conductor_));
    u = poly_mod(std::move(u), phi_poly(conductor_));
    u.resize(coeffs_.size());
    return CyclotomicNumber(conductor_, std::move(u));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

std::string CyclotomicNumber::encode() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].encode();
    }
    os << "]";
    return os.str();
}

CyclotomicNumber CyclotomicNumber::parse(long conductor, const std::string& text) {
    auto l = text.find('[');
    auto r = text.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("CyclotomicNumber::parse: expected [c0, c1, ...]");
    std::vector<Rational> coeffs;
    std::string body = text.substr(l + 1, r - l - 1);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        coeffs.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    return CyclotomicNumber(conductor, std::move(coeffs));
}

CyclotomicNumber cyclo_mul(const CyclotomicNumber& x, const CyclotomicNumber& y) { return x * y; }
CyclotomicNumber cyclo_inverse(const CyclotomicNumber& x) { return x.inverse(); }

} // namespace psl
