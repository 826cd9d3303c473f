#pragma once

#include "psl/lvalues.hpp"
#include "psl/qseries.hpp"

namespace psl {

// Normalized level-1 Eisenstein series: a(0) = 1, a(n) = -(2k/B_k) sigma_{k-1}(n).
// k = 0 gives the constant series 1; k = 2 and odd k are rejected.
EllipticSeries<Rational> eisenstein_level1(long k, long N);

// Normalized Hecke Eisenstein series of weight k and nontrivial character chi
// mod p: a(0) = 1, a(n) = 2 L(1-k,chi)^{-1} sum_{0<d|n} chi(d) d^{k-1}.
EllipticSeries<CyclotomicNumber> hecke_eisenstein_chi(long k, const DirichletCharacter& chi, long N);

// Normalized Jacobi Eisenstein series of weight k (even >= 4) and index 1:
// c(n,r) = H(k-1, 4n - r^2) / H(k-1, 0).
JacobiSeries<Rational> jacobi_eisenstein(long k, long N);

} // namespace psl
