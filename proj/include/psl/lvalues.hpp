#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "psl/characters.hpp"
#include "psl/cyclotomic.hpp"
#include "psl/padic.hpp"
#include "psl/rational.hpp"

namespace psl {

/* Exact Bernoulli numbers B_k (B_1 = -1/2), computed by the convolution
 * recurrence sum_j C(k+1,j) B_j = 0 and memoized. Single writer, safe
 * concurrent readers after publication. */
class BernoulliCache {
public:
    static BernoulliCache& global();

    Rational get(long k);
    void ensure(long k);
    long computed_up_to() const;

    // Preseed an entry (from a persistent cache); ignored unless it extends
    // the table contiguously. Values are trusted by the caller.
    void offer(long k, const Rational& value);
    void snapshot(const std::function<void(long, const Rational&)>& sink) const;

private:
    mutable std::mutex mtx_;
    std::vector<Rational> table_; // B_0 .. B_{size-1}
};

Rational bernoulli(long k);

// B_k(x) = sum_j C(k,j) B_j x^{k-j}
Rational bernoulli_poly_at(long k, const Rational& x);

// B_{k,chi} = f^{k-1} sum_{a mod f} chi(a) B_k(a/f) for chi mod the odd prime p.
CyclotomicNumber generalized_bernoulli(long k, const DirichletCharacter& chi);

// Same, for the quadratic character chi_D = (D/.) of modulus |D|, D a
// fundamental discriminant or 1 (modulus-1 trivial character: returns B_k).
Rational generalized_bernoulli_kronecker(long k, long D);

struct LValue {
    long k = 0;
    CyclotomicNumber value;
    bool parity_ok = true; // false: chi(-1) != (-1)^k, value forced to 0
};

// L(1-k, chi) = -B_{k,chi}/k.
LValue dirichlet_L_neg(long k, const DirichletCharacter& chi);

// zeta(1-k) = -B_k/k for even k >= 2.
Rational zeta_neg(long k);

// L(1-k, chi_D) for fundamental D or D = 1.
Rational dirichlet_L_neg_kronecker(long k, long D);

// Cohen's H(r, N): H(r,0) = zeta(1-2r); for N > 0 with (-1)^r N = D f^2,
// H(r,N) = L(1-r,chi_D) sum_{d|f} mu(d) chi_D(d) d^{r-1} sigma_{2r-1}(f/d);
// zero when (-1)^r N = 2, 3 mod 4.
Rational cohen_H(long r, long N);

// Is D the discriminant of a quadratic field (or D = 1)?
bool is_fundamental_discriminant(long D);
// (-1)^r N = D f^2 with D fundamental (or 1); requires (-1)^r N = 0,1 mod 4.
std::pair<long, long> fundamental_discriminant_decompose(long s);

// v_p(B_l / 2l), exact, l even >= 2.
long constant_term_valuation(long l, long p);

struct KummerResult {
    bool congruent = false;
    PadicApprox lhs, rhs;
};

// Checks (1-p^{k-1})(-B_k/k) = (1-p^{k'-1})(-B_{k'}/k') mod p^M for
// k = k' mod (p-1)p^{M-1}, both even, both outside the pole branch.
KummerResult kummer_check(long k, long k_prime, long p, int M);

// Process-wide memo tables for the derived L-value families; exposed so the
// persistent cache layer can load and drain them.
class LValueCaches {
public:
    static LValueCaches& global();

    bool lookup_gen(const std::string& key, CyclotomicNumber& out, long conductor);
    void store_gen(const std::string& key, const CyclotomicNumber& v);
    bool lookup_rat(const std::string& key, Rational& out);
    void store_rat(const std::string& key, const Rational& v);
    void snapshot(const std::function<void(const std::string&, const std::string&, bool)>& sink) const;

private:
    mutable std::mutex mtx_;
    std::map<std::string, std::string> gen_;  // encoded cyclotomic values
    std::map<std::string, std::string> rat_;  // encoded rationals
};

} // namespace psl
