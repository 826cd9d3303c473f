#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psl/eisenstein.hpp"
#include "psl/lab.hpp"
#include "psl/maass.hpp"

using namespace psl;

namespace {

// E^J_{6,1} lifted into Q(zeta_4) coefficients, to elliptic order N^2.
JacobiSeries<CyclotomicNumber> phi_input(long N) {
    return map_coefficients(jacobi_eisenstein(6, N * N), [](const Rational& x) {
        return CyclotomicNumber::from_rational(4, x);
    });
}

} // namespace

TEST_CASE("lift formula at small indices") {
    DirichletCharacter chi(5, 1);
    long k = 15, N = 2;
    auto phi = phi_input(N);
    auto F = maass_lift(phi, k, chi, 5, N);

    // constant term is (1/2) L(1-k, chi) c(0,0)
    CyclotomicNumber half_L = dirichlet_L_neg(k, chi).value.scaled(Rational(1, 2));
    CHECK(F.at(0, 0, 0) == half_L * phi.at(0, 0));

    // row l = 1 is the input
    for (const auto& [key, v] : phi.c)
        if (key.n <= N && key.r * key.r <= 4 * key.n)
            CHECK(F.at(key.n, key.r, 1) == phi.at(key.n, key.r));

    // a(2,2,2) = c(4,2) + chi(2) 2^{k-1} c(1,1)
    CyclotomicNumber expect =
        phi.at(4, 2) + chi.value(2).scaled(Rational(pow_mpz(2, k - 1))) * phi.at(1, 1);
    CHECK(F.at(2, 2, 2) == expect);

    CHECK_THROWS_AS(maass_lift(phi, k, chi, 5, 3), std::invalid_argument); // order too low
    CHECK_THROWS_AS(maass_lift(phi, 14, chi, 5, N), std::invalid_argument); // parity
}

TEST_CASE("lift symmetries") {
    DirichletCharacter chi(5, 1);
    long N = 3;
    auto phi = phi_input(N);
    auto F = maass_lift(phi, 15, chi, 5, N);
    for (const auto& key : SiegelSeries<CyclotomicNumber>::support(N)) {
        CHECK(F.at(key.n, key.r, key.l) == F.at(key.l, key.r, key.n));
        CHECK(F.at(key.n, key.r, key.l) == F.at(key.n, -key.r, key.l));
    }
}

TEST_CASE("row l=0 is the Hecke Eisenstein series scaled by the constant term") {
    DirichletCharacter chi(5, 1);
    long k = 15, N = 2;
    auto phi = phi_input(N);
    auto F = maass_lift(phi, k, chi, 5, N);
    CyclotomicNumber c0 = F.at(0, 0, 0); // (1/2) L c(0,0)
    auto hecke = hecke_eisenstein_chi(k, chi, N);
    // hecke a(n) = 2 L^{-1} sum, so c0 * hecke(n) = (1/2)L c(0,0) * 2 L^{-1} sum
    for (long n = 0; n <= N; ++n) CHECK(F.at(n, 0, 0) == c0 * hecke.a[n]);
}

TEST_CASE("the divisor sum skips p-divisible divisors") {
    // a mock multiplicative weight that does NOT vanish at p distinguishes
    // the explicit (d, p) = 1 filter from the character's own vanishing
    auto phi = jacobi_eisenstein(6, 25);
    auto w = [](long d) { return Rational(d * d); };
    Rational half_L(1, 2);
    auto F5 = maass_lift_generic<Rational>(phi, 3, 5, w, half_L, 5);
    auto F7 = maass_lift_generic<Rational>(phi, 3, 7, w, half_L, 5);
    // gcd(5,0,5) = 5: divisors {1,5}; d=5 is filtered at p=5 but not at p=7
    CHECK(F5.at(5, 0, 5) == phi.at(25, 0));
    CHECK(F7.at(5, 0, 5) == phi.at(25, 0) + Rational(25) * phi.at(1, 0));
    CHECK(F5.at(5, 5, 5) == phi.at(25, 5));
    CHECK(F7.at(5, 5, 5) == phi.at(25, 5) + Rational(25) * phi.at(1, 1));

    // with a genuine character the same indices reduce to the d=1 term
    DirichletCharacter chi(5, 1);
    auto phic = phi_input(5);
    auto F = maass_lift(phic, 15, chi, 5, 5);
    CHECK(F.at(5, 0, 5) == phic.at(25, 0));
    CHECK(F.at(5, 5, 5) == phic.at(25, 5));
}

TEST_CASE("defect report pinpoints perturbations") {
    DirichletCharacter chi(5, 1);
    long N = 2;
    auto phi = phi_input(N);
    auto F = maass_lift(phi, 15, chi, 5, N);
    CHECK(maass_defect(F, phi, 15, chi, 5).empty());

    auto broken = F;
    broken.a[{1, 1, 2}] = broken.at(1, 1, 2) + CyclotomicNumber::one(4);
    auto defects = maass_defect(broken, phi, 15, chi, 5);
    REQUIRE(defects.size() == 1);
    CHECK(defects[0].where == SiegelIndexKey{1, 1, 2});
}

TEST_CASE("the lift commutes with coefficient embeddings") {
    DirichletCharacter chi(5, 1);
    long k = 15, N = 2, p = 5;
    EmbeddingSigma sigma(p, 1, 10);
    auto phi = phi_input(N);
    auto lift_then_map = map_coefficients(
        maass_lift(phi, k, chi, p, N),
        [&sigma](const CyclotomicNumber& x) { return embed(x, sigma); });

    auto phi_p = map_coefficients(phi, [&sigma](const CyclotomicNumber& x) { return embed(x, sigma); });
    auto weight_p = [&](long d) {
        return embed(chi.value(d).scaled(Rational(pow_mpz(d, k - 1))), sigma);
    };
    PadicApprox half_L_p = embed(dirichlet_L_neg(k, chi).value.scaled(Rational(1, 2)), sigma);
    auto map_then_lift = maass_lift_generic<PadicApprox>(phi_p, k, p, weight_p, half_L_p, N);

    for (const auto& key : SiegelSeries<PadicApprox>::support(N)) {
        PadicApprox a = lift_then_map.at(key.n, key.r, key.l);
        PadicApprox b = map_then_lift.at(key.n, key.r, key.l);
        CHECK(!(a - b).is_nonzero()); // approximations of one value never contradict
    }
}
