#pragma once

#include <string>
#include <vector>

#include "psl/cyclotomic.hpp"
#include "psl/padic.hpp"

namespace psl {

/* Dirichlet character mod an odd prime p, stored by its value exponent on
 * the canonical (smallest) primitive root g: chi(g) = zeta_{p-1}^t.
 * Values live in Q(zeta_{p-1}); chi(d) = 0 whenever p | d. */
class DirichletCharacter {
public:
    DirichletCharacter(long p, long t);

    static DirichletCharacter parse(const std::string& spec); // "p:t"

    long p() const { return p_; }
    long g() const { return g_; }
    long t() const { return t_; }
    long conductor_field() const { return p_ - 1; } // conductor of the value field

    bool is_principal() const { return t_ == 0; }
    long order() const;
    // chi(-1) as +1 or -1.
    int parity() const { return t_ % 2 == 0 ? 1 : -1; }

    CyclotomicNumber value(long d) const;
    DirichletCharacter inverse() const { return DirichletCharacter(p_, (p_ - 1 - t_) % (p_ - 1)); }
    DirichletCharacter operator*(const DirichletCharacter& o) const;

    bool operator==(const DirichletCharacter& o) const { return p_ == o.p_ && t_ == o.t_; }

    std::string encode() const; // "p:t"

private:
    long p_, g_, t_;
};

// The unique (p-1)-th root of unity congruent to d mod p, computed mod p^M
// by iterated p-th powering.
ZmodPk teichmuller(long d, long p, int M);

// Roots d_1 < ... < d_r of Phi_{p-1} mod p (r = phi(p-1)); these are exactly
// the primitive (p-1)-th roots of unity mod p.
std::vector<long> factor_cyclotomic_mod_p(long p);

/* One of the phi(p-1) embeddings Q(zeta_{p-1}) -> Q_p, determined by sending
 * zeta_{p-1} to omega(d_i) for the i-th root (ascending, 1-based). */
class EmbeddingSigma {
public:
    EmbeddingSigma(long p, int index, int precision_M);

    static EmbeddingSigma parse(const std::string& spec, int precision_M); // "p:i"

    long p() const { return p_; }
    int index() const { return index_; }
    long root() const { return root_; }
    int precision() const { return prec_; }
    EmbeddingSigma with_precision(int M) const { return EmbeddingSigma(p_, index_, M); }

    std::string encode() const; // "p:i"

private:
    long p_;
    int index_;
    long root_;
    int prec_;
};

struct PrecisionLossError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ring-homomorphic image of x under sigma: substitute zeta_{p-1} by the
// Teichmuller lift of the root, with rational coefficients pushed into Q_p.
// Result carries relative precision sigma.precision().
PadicApprox embed(const CyclotomicNumber& x, const EmbeddingSigma& sigma);

// alpha in [0, p-2] with chi^sigma = omega^alpha; verifies
// embed(chi(d), sigma) = omega(d)^alpha mod p^M for every d coprime to p.
long find_alpha(const DirichletCharacter& chi, const EmbeddingSigma& sigma);

// Smallest a >= 2 with a = -alpha mod (p-1).
long select_a(long alpha, long p);

/* Weight-space element: (s, class) in Z_p x Z/(p-1)Z. */
struct WeightX {
    PadicApprox s_component;
    long class_component = 0;
};

WeightX weight_of(long k, long p, int M);

} // namespace psl
