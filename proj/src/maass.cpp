#include "psl/maass.hpp"

#include <stdexcept>

#include "psl/numutil.hpp"

namespace psl {

SiegelSeries<CyclotomicNumber> maass_lift(const JacobiSeries<CyclotomicNumber>& phi, long k,
                                          const DirichletCharacter& chi, long p, long N) {
    if (chi.p() != p) throw std::invalid_argument("maass_lift: character modulus mismatch");
    if (chi.parity() != (k % 2 == 0 ? 1 : -1))
        throw std::invalid_argument("maass_lift: chi(-1) != (-1)^k");
    LValue L = dirichlet_L_neg(k, chi);
    CyclotomicNumber half_L = L.value.scaled(Rational(1, 2));
    auto weight_d = [&chi, k](long d) {
        return chi.value(d).scaled(Rational(pow_mpz(d, k - 1)));
    };
    return maass_lift_generic<CyclotomicNumber>(phi, k, p, weight_d, half_L, N, chi);
}

std::vector<MaassDefect> maass_defect(const SiegelSeries<CyclotomicNumber>& F,
                                      const JacobiSeries<CyclotomicNumber>& phi, long k,
                                      const DirichletCharacter& chi, long p) {
    SiegelSeries<CyclotomicNumber> fresh = maass_lift(phi, k, chi, p, F.trunc);
    std::vector<MaassDefect> defects;
    for (const auto& key : SiegelSeries<CyclotomicNumber>::support(F.trunc)) {
        CyclotomicNumber expected = fresh.at(key.n, key.r, key.l);
        CyclotomicNumber got = F.at(key.n, key.r, key.l);
        if (!(expected == got)) defects.push_back({key, expected, got});
    }
    return defects;
}

} // namespace psl
