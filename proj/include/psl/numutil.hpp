#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <vector>

namespace psl {

bool is_prime(long n);
bool is_odd_prime(long n);

// Primes q <= bound, by sieve.
std::vector<long> primes_up_to(long bound);

// Positive divisors of n >= 1, ascending.
std::vector<long> divisors(long n);

// Moebius function; 0 on non-squarefree input.
int moebius(long n);

long gcd_ll(long a, long b);
long lcm_ll(long a, long b);

// Euler phi for small n.
long euler_phi(long n);

// Kronecker symbol (D/n) for n >= 1, completely multiplicative in n.
int kronecker_symbol(const mpz_class& D, long n);
int kronecker_symbol(long D, long n);

// Smallest g >= 2 generating (Z/p)^x, p an odd prime.
long primitive_root(long p);

// Exponent e in [0, p-2] with g^e = x mod p. Requires p not dividing x.
long discrete_log(long p, long g, long x);

// sigma_k(n) = sum of d^k over positive divisors d of n.
mpz_class divisor_sigma(long n, long k);

// Coefficients of the m-th cyclotomic polynomial, ascending degree,
// length phi(m)+1, monic. Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(long m);

mpz_class binomial(long n, long k);
mpz_class pow_mpz(long base, long exp);

} // namespace psl
