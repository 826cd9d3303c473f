#include "psl/eisenstein.hpp"

#include <stdexcept>

#include "psl/numutil.hpp"

namespace psl {

EllipticSeries<Rational> eisenstein_level1(long k, long N) {
    FormMeta meta{k, std::nullopt, 1, SeriesKind::Elliptic};
    if (k == 0) return elliptic_one<Rational>(N, Rational(1), meta);
    if (k == 2 || k % 2 != 0 || k < 0)
        throw std::invalid_argument("eisenstein_level1: weight must be 0 or even >= 4");
    EllipticSeries<Rational> f(N, meta);
    f.a[0] = Rational(1);
    Rational c = Rational(-2 * k) / bernoulli(k);
    for (long n = 1; n <= N; ++n) f.a[n] = c * Rational(divisor_sigma(n, k - 1));
    return f;
}

EllipticSeries<CyclotomicNumber> hecke_eisenstein_chi(long k, const DirichletCharacter& chi, long N) {
    if (k < 1) throw std::invalid_argument("hecke_eisenstein_chi: weight must be >= 1");
    if (chi.is_principal())
        throw std::invalid_argument("hecke_eisenstein_chi: character must be nontrivial");
    LValue L = dirichlet_L_neg(k, chi);
    if (!L.parity_ok)
        throw std::invalid_argument("hecke_eisenstein_chi: chi(-1) != (-1)^k, L-value vanishes");
    long m = chi.conductor_field();
    CyclotomicNumber c = L.value.inverse().scaled(Rational(2));
    FormMeta meta{k, chi, chi.p(), SeriesKind::Elliptic};
    EllipticSeries<CyclotomicNumber> f(N, meta);
    for (long n = 0; n <= N; ++n) f.a[n] = CyclotomicNumber::zero(m);
    f.a[0] = CyclotomicNumber::one(m);
    for (long n = 1; n <= N; ++n) {
        CyclotomicNumber s = CyclotomicNumber::zero(m);
        for (long d : divisors(n)) {
            if (d % chi.p() == 0) continue; // chi vanishes on p-divisible divisors
            s += chi.value(d).scaled(Rational(pow_mpz(d, k - 1)));
        }
        f.a[n] = c * s;
    }
    return f;
}

JacobiSeries<Rational> jacobi_eisenstein(long k, long N) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("jacobi_eisenstein: weight must be even >= 4");
    JacobiSeries<Rational> phi;
    phi.trunc = N;
    phi.meta = FormMeta{k, std::nullopt, 1, SeriesKind::JacobiIndex1};
    Rational H0 = cohen_H(k - 1, 0);
    for (const auto& key : JacobiSeries<Rational>::support(N))
        phi.c[key] = cohen_H(k - 1, 4 * key.n - key.r * key.r) / H0;
    return phi;
}

} // namespace psl
