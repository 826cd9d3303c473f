#include "psl/characters.hpp"

#include <sstream>
#include <stdexcept>

#include "psl/numutil.hpp"

namespace psl {

DirichletCharacter::DirichletCharacter(long p, long t) : p_(p), t_(((t % (p - 1)) + (p - 1)) % (p - 1)) {
    if (!is_odd_prime(p)) throw std::invalid_argument("DirichletCharacter: p must be an odd prime");
    g_ = primitive_root(p);
}

DirichletCharacter DirichletCharacter::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("character spec must be \"p:t\"");
    long p = std::stol(spec.substr(0, colon));
    long t = std::stol(spec.substr(colon + 1));
    return DirichletCharacter(p, t);
}

long DirichletCharacter::order() const { return (p_ - 1) / gcd_ll(t_, p_ - 1); }

CyclotomicNumber DirichletCharacter::value(long d) const {
    long m = p_ - 1;
    long dr = ((d % p_) + p_) % p_;
    if (dr == 0) return CyclotomicNumber::zero(m);
    return CyclotomicNumber::root_power(m, t_ * discrete_log(p_, g_, dr));
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
    if (p_ != o.p_) throw std::invalid_argument("DirichletCharacter: modulus mismatch");
    return DirichletCharacter(p_, t_ + o.t_);
}

std::string DirichletCharacter::encode() const {
    return std::to_string(p_) + ":" + std::to_string(t_);
}

ZmodPk teichmuller(long d, long p, int M) {
    if (!is_odd_prime(p)) throw std::invalid_argument("teichmuller: p must be an odd prime");
    long dr = ((d % p) + p) % p;
    if (dr == 0) throw std::invalid_argument("teichmuller: d divisible by p");
    ZmodPk x(p, M, dr);
    // d^{p^n} = omega(d) mod p^{n+1}; iterate to a fixed point of y -> y^p.
    for (int i = 0; i < M; ++i) {
        ZmodPk y = x.pow(p);
        if (y == x) break;
        x = y;
    }
    return x;
}

std::vector<long> factor_cyclotomic_mod_p(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("factor_cyclotomic_mod_p: p must be an odd prime");
    const auto& phi = cyclotomic_polynomial(p - 1);
    std::vector<long> roots;
    for (long d = 0; d < p; ++d) {
        mpz_class v = 0;
        for (long i = static_cast<long>(phi.size()) - 1; i >= 0; --i) v = (v * d + phi[i]) % p;
        if (v % p == 0) roots.push_back(d);
    }
    if (static_cast<long>(roots.size()) != euler_phi(p - 1))
        throw std::logic_error("factor_cyclotomic_mod_p: root count mismatch");
    return roots;
}

EmbeddingSigma::EmbeddingSigma(long p, int index, int precision_M)
    : p_(p), index_(index), prec_(precision_M) {
    if (precision_M < 1) throw std::invalid_argument("EmbeddingSigma: precision must be >= 1");
    auto roots = factor_cyclotomic_mod_p(p);
    if (index < 1 || index > static_cast<int>(roots.size()))
        throw std::invalid_argument("EmbeddingSigma: index out of range 1..phi(p-1)");
    root_ = roots[index - 1];
}

EmbeddingSigma EmbeddingSigma::parse(const std::string& spec, int precision_M) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("embedding spec must be \"p:i\"");
    long p = std::stol(spec.substr(0, colon));
    int i = std::stoi(spec.substr(colon + 1));
    return EmbeddingSigma(p, i, precision_M);
}

std::string EmbeddingSigma::encode() const {
    return std::to_string(p_) + ":" + std::to_string(index_);
}

PadicApprox embed(const CyclotomicNumber& x, const EmbeddingSigma& sigma) {
    long p = sigma.p();
    int M = sigma.precision();
    if (x.conductor() != p - 1 && !(x.is_rational()))
        throw std::invalid_argument("embed: conductor must equal p-1");
    if (x.is_zero()) return PadicApprox::exact_zero(p);

    // Clear denominators: x = (1/D) * sum n_j zeta^j with integral n_j.
    mpz_class D = 1;
    for (const auto& c : x.coeffs()) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
        D = D / g * den;
    }
    std::vector<mpz_class> n(x.coeffs().size());
    for (size_t j = 0; j < n.size(); ++j)
        n[j] = x.coeffs()[j].numerator() * (D / x.coeffs()[j].denominator());
    long e = mpz_valuation(D, p);
    mpz_class Dunit = D;
    for (long i = 0; i < e; ++i) Dunit /= p;

    // Working precision K: raised adaptively if the numerator sum turns out
    // to be divisible by a high power of p.
    long K = M + e + 4;
    const long K_cap = 64 * (M + e + 4);
    while (true) {
        ZmodPk omega = teichmuller(sigma.root(), p, static_cast<int>(K));
        ZmodPk s(p, static_cast<int>(K), n[0]);
        ZmodPk zj(p, static_cast<int>(K), 1);
        for (size_t j = 1; j < n.size(); ++j) {
            zj = zj * omega;
            s = s + zj * ZmodPk(p, static_cast<int>(K), n[j]);
        }
        if (s.residue() == 0 || mpz_valuation(s.residue(), p) + M + e > K) {
            if (K >= K_cap)
                throw PrecisionLossError(
                    "embed: image valuation exceeds working precision (denominator "
                    "p-power or deep cancellation); raise M");
            K *= 2;
            continue;
        }
        long a = mpz_valuation(s.residue(), p);
        mpz_class su = s.residue();
        for (long i = 0; i < a; ++i) su /= p;
        mpz_class pr;
        mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(M));
        mpz_class dinv;
        mpz_class dmod = Dunit % pr;
        if (dmod < 0) dmod += pr;
        if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), pr.get_mpz_t()) == 0)
            throw std::logic_error("embed: denominator unit not invertible");
        return PadicApprox::from_parts(p, a - e, (su % pr) * dinv, M);
    }
}

long find_alpha(const DirichletCharacter& chi, const EmbeddingSigma& sigma) {
    long p = chi.p();
    if (p != sigma.p()) throw std::invalid_argument("find_alpha: prime mismatch");
    if (chi.is_principal()) return 0;
    PadicApprox img = embed(chi.value(chi.g()), sigma);
    long residue = mpz_class(img.unit() % p).get_si();
    long alpha = discrete_log(p, chi.g(), residue);
    // full-precision consistency: chi(d)^sigma = omega(d)^alpha mod p^M, all d
    int M = sigma.precision();
    for (long d = 1; d < p; ++d) {
        PadicApprox lhs = embed(chi.value(d), sigma);
        ZmodPk w = teichmuller(d, p, M).pow(alpha);
        PadicApprox rhs = PadicApprox::from_parts(p, 0, w.residue(), M);
        if (!(lhs.reduced_to(M) == rhs.reduced_to(M)))
            throw std::logic_error("find_alpha: omega-power identity failed (wrong root?)");
    }
    return alpha;
}

long select_a(long alpha, long p) {
    long m = p - 1;
    long cls = ((-alpha) % m + m) % m;
    long a = cls == 0 ? m : cls;
    while (a < 2) a += m;
    // parity is forced by the congruence class: chi(-1) = (-1)^alpha = (-1)^a
    if (((a % 2) + 2) % 2 != ((alpha % 2) + 2) % 2)
        throw std::logic_error("select_a: parity inconsistency");
    return a;
}

WeightX weight_of(long k, long p, int M) {
    WeightX w;
    w.s_component = padic_of_rational(Rational(k), p, M);
    w.class_component = ((k % (p - 1)) + (p - 1)) % (p - 1);
    return w;
}

} // namespace psl
