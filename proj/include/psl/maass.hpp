#pragma once

#include <functional>
#include <vector>

#include "psl/lvalues.hpp"
#include "psl/qseries.hpp"

namespace psl {

/* Lift of a weight-k index-1 Jacobi expansion to a degree-2 Siegel expansion:
 *
 *   a(0,0,0) = (1/2) L(1-k,chi) c(0,0),
 *   a(n,r,l) = sum over 0 < d | gcd(n,|r|,l), p not dividing d,
 *              of w(d) c(nl/d^2, r/d)         (gcd(0,x) = x),
 *
 * where w(d) = chi(d) d^{k-1}. The generic form takes w and the constant
 * (1/2)L as ring elements so the same kernel runs over any admitted ring. */
template <CoefficientRing R>
SiegelSeries<R> maass_lift_generic(const JacobiSeries<R>& phi, long k, long p,
                                   const std::function<R(long)>& weight_d, const R& half_L,
                                   long N, std::optional<DirichletCharacter> chi = std::nullopt) {
    if (phi.trunc < N * N)
        throw std::invalid_argument("maass_lift: Jacobi input must be truncated to order >= N^2");
    SiegelSeries<R> F;
    F.trunc = N;
    F.meta = FormMeta{k, chi, p, SeriesKind::SiegelDeg2};
    for (const auto& key : SiegelSeries<R>::support(N)) {
        if (key.is_origin()) {
            F.a[key] = half_L * phi.at(0, 0);
            continue;
        }
        long g = key.n;
        g = g == 0 ? std::labs(key.r) : gcd_ll(g, std::labs(key.r));
        g = g == 0 ? key.l : gcd_ll(g, key.l);
        R s{};
        for (long d : divisors(g)) {
            if (d % p == 0) continue;
            R term = weight_d(d) * phi.at(key.n * key.l / (d * d), key.r / d);
            s = s + term;
        }
        F.a[key] = s;
    }
    return F;
}

// Cyclotomic-coefficient lift with w(d) = chi(d) d^{k-1} and the exact
// constant (1/2) L(1-k, chi). Requires chi(-1) = (-1)^k.
SiegelSeries<CyclotomicNumber> maass_lift(const JacobiSeries<CyclotomicNumber>& phi, long k,
                                          const DirichletCharacter& chi, long p, long N);

/* Regression detector: recomputes the lift of phi and reports every index
 * where F differs. An empty report certifies F. */
struct MaassDefect {
    SiegelIndexKey where;
    CyclotomicNumber expected, got;
};

std::vector<MaassDefect> maass_defect(const SiegelSeries<CyclotomicNumber>& F,
                                      const JacobiSeries<CyclotomicNumber>& phi, long k,
                                      const DirichletCharacter& chi, long p);

} // namespace psl
