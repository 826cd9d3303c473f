#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "psl/cyclotomic.hpp"
#include "psl/numutil.hpp"
#include "psl/padic.hpp"
#include "psl/rational.hpp"

using namespace psl;

namespace {

CyclotomicNumber gaussian(long a, long b) { // a + b*i in Q(zeta_4)
    return CyclotomicNumber(4, {Rational(a), Rational(b)});
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 10);
    return Rational(num(rng), den(rng));
}

CyclotomicNumber random_cyclotomic(std::mt19937_64& rng, long m) {
    std::vector<Rational> c(euler_phi(m));
    for (auto& x : c) x = random_rational(rng);
    return CyclotomicNumber(m, std::move(c));
}

} // namespace

TEST_CASE("rational canonical form and encoding") {
    Rational q(6, -4);
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.encode() == "-3/2");
    CHECK(Rational::parse("-3/2") == q);
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(10, 3).valuation(5) == 1);
    CHECK(Rational(-691, 2730).valuation(5) == -1);
    CHECK(Rational(1, 2).pow(-2) == Rational(4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("cyclotomic multiplication reduces mod Phi_m") {
    CHECK(gaussian(0, 1) * gaussian(0, 1) == gaussian(-1, 0));
    CHECK(gaussian(3, 1) * gaussian(3, -1) == gaussian(10, 0));
    // zeta_6^2 = zeta_6 - 1 under Phi_6 = X^2 - X + 1
    CyclotomicNumber z6 = CyclotomicNumber::root_power(6, 1);
    CHECK(z6 * z6 == CyclotomicNumber(6, {Rational(-1), Rational(1)}));
}

TEST_CASE("cyclotomic inverse by extended gcd") {
    CHECK(cyclo_inverse(gaussian(0, 1)) == gaussian(0, -1));
    CyclotomicNumber x = gaussian(3, 1);
    CyclotomicNumber xi = cyclo_inverse(x);
    CHECK(xi == CyclotomicNumber(4, {Rational(3, 10), Rational(-1, 10)}));
    CHECK(x * xi == CyclotomicNumber::one(4));
    CyclotomicNumber z6 = CyclotomicNumber::root_power(6, 1);
    CHECK(z6 * cyclo_inverse(z6) == CyclotomicNumber::one(6));
    CHECK(cyclo_inverse(z6) == CyclotomicNumber(6, {Rational(1), Rational(-1)}));
    CHECK_THROWS_AS(cyclo_inverse(CyclotomicNumber::zero(4)), std::domain_error);
}

TEST_CASE("cyclotomic conductor mismatch is an error") {
    CyclotomicNumber z6 = CyclotomicNumber::root_power(6, 1);
    CHECK_THROWS_AS(gaussian(0, 1) * z6, std::invalid_argument);
    // rational values lift silently into the other field
    CHECK(CyclotomicNumber::from_rational(6, Rational(2)) * gaussian(1, 1) == gaussian(2, 2));
}

TEST_CASE("cyclotomic field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (long m : {4L, 6L, 10L, 12L}) {
        for (int i = 0; i < 60; ++i) {
            auto x = random_cyclotomic(rng, m), y = random_cyclotomic(rng, m),
                 z = random_cyclotomic(rng, m);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * cyclo_inverse(x) == CyclotomicNumber::one(m));
        }
    }
}

TEST_CASE("padic arithmetic on (valuation, unit) parts") {
    auto a = PadicApprox::from_parts(5, 0, 2, 8);
    auto b = PadicApprox::from_parts(5, 1, 3, 8);
    auto prod = a * b;
    CHECK(prod.valuation() == 1);
    CHECK(prod.unit() == 6);

    // cancellation: 1 + (-1) is zero to the shared absolute precision
    auto one = PadicApprox::from_parts(5, 0, 1, 4);
    auto minus_one = -one;
    auto sum = one + minus_one;
    CHECK(sum.is_zero_to_precision());
    CHECK(sum.valuation() >= 4);

    // inverse flips the valuation and inverts the unit
    auto c = PadicApprox::from_parts(5, -2, 3, 6);
    auto inv = PadicApprox::one(5, 6) / c;
    CHECK(inv.valuation() == 2);
    mpz_class p6 = 15625;
    CHECK((inv.unit() * 3) % p6 == 1);

    CHECK_THROWS_AS(a / PadicApprox::exact_zero(5), std::domain_error);
    CHECK_THROWS_AS(a + PadicApprox::from_parts(7, 0, 1, 8), std::invalid_argument);
}

TEST_CASE("padic_of_rational") {
    auto x = padic_of_rational(Rational(10, 3), 5, 6);
    CHECK(x.valuation() == 1);
    // unit = 2 * 3^{-1} mod 5^6
    mpz_class p6 = 15625;
    CHECK((x.unit() * 3) % p6 == 2);

    auto b12 = padic_of_rational(Rational(-691, 2730), 5, 6);
    CHECK(b12.valuation() == -1);

    CHECK(padic_of_rational(Rational(0), 5).is_exact_zero());
    CHECK(!padic_of_rational(Rational(0), 5).is_zero_to_precision());
}

TEST_CASE("padic arithmetic matches exact rational arithmetic") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        for (long p : {5L, 7L}) {
            auto pa = padic_of_rational(a, p, 10), pb = padic_of_rational(b, p, 10);
            auto sum = pa + pb, prod = pa * pb;
            auto esum = padic_of_rational(a + b, p, 10), eprod = padic_of_rational(a * b, p, 10);
            // no digit of the approximate result may contradict the exact one
            CHECK(!(sum - esum).is_nonzero());
            CHECK(!(prod - eprod).is_nonzero());
            if (!a.is_zero() && !b.is_zero()) {
                CHECK(prod.valuation() == a.valuation(p) + b.valuation(p));
                auto quot = pa / pb;
                CHECK(quot.valuation() == a.valuation(p) - b.valuation(p));
                CHECK(!(quot - padic_of_rational(a / b, p, 10)).is_nonzero());
            }
            ++checked;
        }
    }
    CHECK(checked == 2000);
}

TEST_CASE("kronecker symbol") {
    CHECK(kronecker_symbol(-3, 2) == -1);
    CHECK(kronecker_symbol(-4, 3) == -1);
    for (long D : {-8L, -3L, 1L, 5L, 12L, -20L}) CHECK(kronecker_symbol(D, 1) == 1);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> Ds(-40, 40), ns(1, 60);
    for (int i = 0; i < 300; ++i) {
        long D = Ds(rng), m = ns(rng), n = ns(rng);
        CHECK(kronecker_symbol(D, m * n) == kronecker_symbol(D, m) * kronecker_symbol(D, n));
    }
    for (long D = -30; D <= 30; ++D)
        for (long n = 1; n <= 50; ++n)
            CHECK(kronecker_symbol(D, n) == oracles::kronecker_by_factorization(D, n));
}

TEST_CASE("primitive roots and discrete logs") {
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(11) == 2);
    for (long p = 3; p <= 50; p += 2) {
        if (!is_prime(p)) continue;
        CHECK(primitive_root(p) == oracles::primitive_root_enumerated(p));
    }

    CHECK(discrete_log(5, 2, 3) == 3);
    CHECK(discrete_log(5, 2, 1) == 0);
    CHECK(discrete_log(7, 3, 5) == 5);
    CHECK_THROWS_AS(discrete_log(5, 2, 10), std::invalid_argument);
    for (long p = 3; p <= 50; p += 2) {
        if (!is_prime(p)) continue;
        long g = primitive_root(p);
        for (long x = 1; x < p; ++x) {
            long e = discrete_log(p, g, x);
            mpz_class r, base(g), mod(p);
            mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), mod.get_mpz_t());
            CHECK(r == x);
        }
    }
}

TEST_CASE("exact zero is distinct from zero-to-precision") {
    auto exact = PadicApprox::exact_zero(5);
    auto fuzzy = PadicApprox::zero_to_precision(5, 4);
    CHECK(exact.is_exact_zero());
    CHECK(!exact.is_zero_to_precision());
    CHECK(fuzzy.is_zero_to_precision());
    CHECK(!fuzzy.is_exact_zero());
    CHECK(exact != fuzzy);
    CHECK_THROWS_AS(exact.valuation(), std::domain_error);
    CHECK(fuzzy.valuation() == 4);
}
