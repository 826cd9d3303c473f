#include "psl/lvalues.hpp"

#include <cmath>
#include <stdexcept>

#include "psl/numutil.hpp"

namespace psl {

BernoulliCache& BernoulliCache::global() {
    static BernoulliCache cache;
    return cache;
}

long BernoulliCache::computed_up_to() const {
    std::lock_guard<std::mutex> lock(mtx_);
    return static_cast<long>(table_.size()) - 1;
}

void BernoulliCache::ensure(long k) {
    std::lock_guard<std::mutex> lock(mtx_);
    if (static_cast<long>(table_.size()) > k) return;
    if (table_.empty()) table_.push_back(Rational(1));
    if (table_.size() == 1 && k >= 1) table_.push_back(Rational(-1, 2));
    for (long n = static_cast<long>(table_.size()); n <= k; ++n) {
        if (n % 2 == 1) {
            table_.push_back(Rational(0));
            continue;
        }
        // sum_{j=0}^{n} C(n+1,j) B_j = 0
        Rational s(0);
        mpz_class binom = 1; // C(n+1, 0)
        for (long j = 0; j <= n - 1; ++j) {
            if ((j <= 1 || j % 2 == 0) && !table_[j].is_zero())
                s += Rational(binom) * table_[j];
            binom *= (n + 1 - j);
            binom /= (j + 1);
        }
        table_.push_back(Rational(-1, n + 1) * s);
    }
}

Rational BernoulliCache::get(long k) {
    if (k < 0) throw std::invalid_argument("bernoulli: k must be >= 0");
    ensure(k);
    std::lock_guard<std::mutex> lock(mtx_);
    return table_[k];
}

void BernoulliCache::offer(long k, const Rational& value) {
    std::lock_guard<std::mutex> lock(mtx_);
    if (k == static_cast<long>(table_.size())) table_.push_back(value);
}

void BernoulliCache::snapshot(const std::function<void(long, const Rational&)>& sink) const {
    std::lock_guard<std::mutex> lock(mtx_);
    for (size_t k = 0; k < table_.size(); ++k) sink(static_cast<long>(k), table_[k]);
}

Rational bernoulli(long k) { return BernoulliCache::global().get(k); }

Rational bernoulli_poly_at(long k, const Rational& x) {
    if (k < 0) throw std::invalid_argument("bernoulli_poly_at: k must be >= 0");
    BernoulliCache::global().ensure(k);
    // Horner from the x^k term down: B_k(x) = sum_j C(k,j) B_j x^{k-j}
    Rational acc(0);
    for (long j = 0; j <= k; ++j) {
        acc *= x;
        Rational bj = bernoulli(j);
        if (!bj.is_zero()) acc += Rational(binomial(k, j)) * bj;
    }
    return acc;
}

LValueCaches& LValueCaches::global() {
    static LValueCaches c;
    return c;
}

bool LValueCaches::lookup_gen(const std::string& key, CyclotomicNumber& out, long conductor) {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = gen_.find(key);
    if (it == gen_.end()) return false;
    out = CyclotomicNumber::parse(conductor, it->second);
    return true;
}

void LValueCaches::store_gen(const std::string& key, const CyclotomicNumber& v) {
    std::lock_guard<std::mutex> lock(mtx_);
    gen_[key] = v.encode();
}

bool LValueCaches::lookup_rat(const std::string& key, Rational& out) {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = rat_.find(key);
    if (it == rat_.end()) return false;
    out = Rational::parse(it->second);
    return true;
}

void LValueCaches::store_rat(const std::string& key, const Rational& v) {
    std::lock_guard<std::mutex> lock(mtx_);
    rat_[key] = v.encode();
}

void LValueCaches::snapshot(
    const std::function<void(const std::string&, const std::string&, bool)>& sink) const {
    std::lock_guard<std::mutex> lock(mtx_);
    for (const auto& [k, v] : gen_) sink(k, v, true);
    for (const auto& [k, v] : rat_) sink(k, v, false);
}

CyclotomicNumber generalized_bernoulli(long k, const DirichletCharacter& chi) {
    if (k < 1) throw std::invalid_argument("generalized_bernoulli: k must be >= 1");
    long p = chi.p(), m = p - 1;
    std::string key = "chi:" + chi.encode() + ":k:" + std::to_string(k);
    CyclotomicNumber cached = CyclotomicNumber::zero(m);
    if (LValueCaches::global().lookup_gen(key, cached, m)) return cached;

    // f^{k-1} sum_{a=0}^{f-1} chi(a) B_k(a/f); chi(0) = 0 for modulus > 1,
    // so the boundary term never contributes here.
    CyclotomicNumber s = CyclotomicNumber::zero(m);
    for (long a = 1; a < p; ++a)
        s += chi.value(a).scaled(bernoulli_poly_at(k, Rational(a, p)));
    CyclotomicNumber result = s.scaled(Rational(p).pow(k - 1));
    LValueCaches::global().store_gen(key, result);
    return result;
}

Rational generalized_bernoulli_kronecker(long k, long D) {
    if (k < 1) throw std::invalid_argument("generalized_bernoulli_kronecker: k must be >= 1");
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("generalized_bernoulli_kronecker: D must be fundamental or 1");
    std::string key = "disc:" + std::to_string(D) + ":k:" + std::to_string(k);
    Rational cached;
    if (LValueCaches::global().lookup_rat(key, cached)) return cached;

    // f^{k-1} sum_{a=0}^{f-1} chi_D(a) B_k(a/f). For modulus 1 the single
    // a = 0 term gives plain B_k (so B_1 keeps the -1/2 convention); for
    // modulus > 1 the a = 0 term vanishes with chi_D(0) = 0.
    long f = std::labs(D);
    if (f == 1) {
        Rational result = bernoulli(k);
        LValueCaches::global().store_rat(key, result);
        return result;
    }
    Rational s(0);
    for (long a = 1; a < f; ++a) {
        int chi = kronecker_symbol(D, a);
        if (chi == 0) continue;
        s += Rational(chi) * bernoulli_poly_at(k, Rational(a, f));
    }
    Rational result = Rational(f).pow(k - 1) * s;
    LValueCaches::global().store_rat(key, result);
    return result;
}

LValue dirichlet_L_neg(long k, const DirichletCharacter& chi) {
    if (k < 1) throw std::invalid_argument("dirichlet_L_neg: k must be >= 1");
    LValue out;
    out.k = k;
    int want = k % 2 == 0 ? 1 : -1;
    if (chi.parity() != want) {
        out.value = CyclotomicNumber::zero(chi.conductor_field());
        out.parity_ok = false;
        return out;
    }
    out.value = generalized_bernoulli(k, chi).scaled(Rational(-1, k));
    return out;
}

Rational zeta_neg(long k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("zeta_neg: k must be even >= 2");
    return Rational(-1, k) * bernoulli(k);
}

Rational dirichlet_L_neg_kronecker(long k, long D) {
    return Rational(-1, k) * generalized_bernoulli_kronecker(k, D);
}

bool is_fundamental_discriminant(long D) {
    if (D == 1) return true;
    if (D == 0) return false;
    long m = D % 4;
    if (m < 0) m += 4;
    auto squarefree = [](long n) {
        n = std::labs(n);
        for (long d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) return false;
        return true;
    };
    if (m == 1) return squarefree(D);
    if (m == 0) {
        long q = D / 4;
        long qm = q % 4;
        if (qm < 0) qm += 4;
        return (qm == 2 || qm == 3) && squarefree(q);
    }
    return false;
}

std::pair<long, long> fundamental_discriminant_decompose(long s) {
    long m = s % 4;
    if (m < 0) m += 4;
    if (m == 2 || m == 3)
        throw std::invalid_argument("fundamental_discriminant_decompose: s must be 0,1 mod 4");
    if (s == 0) throw std::invalid_argument("fundamental_discriminant_decompose: s must be nonzero");
    long N = std::labs(s);
    for (long f = 1; f * f <= N; ++f) {
        if (N % (f * f) != 0) continue;
        long D = s / (f * f);
        if (is_fundamental_discriminant(D)) return {D, f};
    }
    throw std::logic_error("fundamental_discriminant_decompose: no decomposition found");
}

Rational cohen_H(long r, long N) {
    if (r < 1 || N < 0) throw std::invalid_argument("cohen_H: need r >= 1, N >= 0");
    std::string key = "H:" + std::to_string(r) + ":" + std::to_string(N);
    Rational cached;
    if (LValueCaches::global().lookup_rat(key, cached)) return cached;

    Rational result;
    if (N == 0) {
        result = zeta_neg(2 * r);
    } else {
        long s = (r % 2 == 0) ? N : -N;
        long m = ((s % 4) + 4) % 4;
        if (m == 2 || m == 3) {
            result = Rational(0);
        } else {
            auto [D, f] = fundamental_discriminant_decompose(s);
            Rational sum(0);
            for (long d : divisors(f)) {
                int mu = moebius(d);
                if (mu == 0) continue;
                int chi = kronecker_symbol(D, d);
                if (chi == 0) continue;
                sum += Rational(mu * chi) * Rational(pow_mpz(d, r - 1)) *
                       Rational(divisor_sigma(f / d, 2 * r - 1));
            }
            result = dirichlet_L_neg_kronecker(r, D) * sum;
        }
    }
    LValueCaches::global().store_rat(key, result);
    return result;
}

long constant_term_valuation(long l, long p) {
    if (l < 2 || l % 2 != 0) throw std::invalid_argument("constant_term_valuation: l must be even >= 2");
    Rational b = bernoulli(l);
    return b.valuation(p) - Rational(2 * l).valuation(p);
}

KummerResult kummer_check(long k, long k_prime, long p, int M) {
    if (!is_odd_prime(p)) throw std::invalid_argument("kummer_check: p must be an odd prime");
    if (k < 2 || k_prime < 2 || k % 2 != 0 || k_prime % 2 != 0)
        throw std::invalid_argument("kummer_check: weights must be even >= 2");
    if (k % (p - 1) == 0 || k_prime % (p - 1) == 0)
        throw std::invalid_argument("kummer_check: pole branch k = 0 mod p-1 rejected");
    mpz_class step = pow_mpz(p, M - 1) * (p - 1);
    if ((mpz_class(k - k_prime) % step) != 0)
        throw std::invalid_argument("kummer_check: need k = k' mod (p-1)p^{M-1}");

    auto value = [&](long kk) {
        Rational euler = Rational(1) - Rational(pow_mpz(p, kk - 1));
        return euler * Rational(-1, kk) * bernoulli(kk);
    };
    KummerResult res;
    res.lhs = padic_of_rational(value(k), p, M + 2);
    res.rhs = padic_of_rational(value(k_prime), p, M + 2);
    PadicApprox diff = res.lhs - res.rhs;
    res.congruent = diff.is_exact_zero() || diff.valuation() >= M;
    return res;
}

} // namespace psl
