#pragma once

#include <optional>

#include "psl/rational.hpp"

namespace psl::oracles {

// Akiyama-Tanigawa triangle; note the B_1 = +1/2 convention of this
// algorithm (agrees with the library for every other index).
Rational bernoulli_akiyama_tanigawa(long n);

// Hurwitz class number H(N) for N >= 1, N = 0,3 mod 4, by counting reduced
// binary quadratic forms of discriminant -N with the standard weights.
Rational hurwitz_class_number(long N);

// Kronecker symbol assembled from Euler's criterion at odd primes and the
// mod-8 rule at 2.
int kronecker_by_factorization(long D, long n);

// Primitive root by direct order computation.
long primitive_root_enumerated(long p);

std::optional<long> discrete_log_enumerated(long p, long g, long x);

// sigma_k(n) by a plain trial loop.
mpz_class divisor_power_sum(long n, long k);

/* Numerical Fourier coefficients c(1,0), c(1,1), c(1,2) of the normalized
 * index-1 Jacobi Eisenstein series of weight 4, obtained by summing theta
 * series: the weak Jacobi forms phi_{0,1} and phi_{-2,1} are built from
 * Jacobi thetas and the eta function, combined with E_4 and E_6 so the
 * constant term is (1, 0, 0), then the q^1 row is extracted by a DFT in z
 * and Richardson extrapolation across three values of Im(tau). */
struct JacobiEisensteinRow {
    double c10 = 0, c11 = 0, c12 = 0;
};
JacobiEisensteinRow jacobi_eisenstein_weight4_row1_numeric();

} // namespace psl::oracles
