#include "psl/numutil.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace psl {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_odd_prime(long n) { return n > 2 && is_prime(n); }

std::vector<long> primes_up_to(long bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<long> out;
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int count = 0;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        ++count;
    }
    if (n > 1) ++count;
    return count % 2 == 0 ? 1 : -1;
}

long gcd_ll(long a, long b) { return std::gcd(a, b); }
long lcm_ll(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    long result = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        result -= result / d;
    }
    if (n > 1) result -= result / n;
    return result;
}

int kronecker_symbol(const mpz_class& D, long n) {
    if (n < 1) throw std::invalid_argument("kronecker_symbol: n must be positive");
    mpz_class nn(n);
    return mpz_kronecker(D.get_mpz_t(), nn.get_mpz_t());
}

int kronecker_symbol(long D, long n) { return kronecker_symbol(mpz_class(D), n); }

long primitive_root(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("primitive_root: p must be an odd prime");
    // prime factors of p-1
    std::vector<long> qs;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        qs.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) qs.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs) {
            mpz_class r, base(g), mod(p);
            mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / q, mod.get_mpz_t());
            if (r == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

long discrete_log(long p, long g, long x) {
    long xr = ((x % p) + p) % p;
    if (xr == 0) throw std::invalid_argument("discrete_log: x divisible by p");
    long cur = 1;
    for (long e = 0; e <= p - 2; ++e) {
        if (cur == xr) return e;
        cur = (cur * g) % p;
    }
    throw std::invalid_argument("discrete_log: g is not a primitive root mod p");
}

mpz_class divisor_sigma(long n, long k) {
    mpz_class s = 0;
    for (long d : divisors(n)) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        s += t;
    }
    return s;
}

namespace {

// Integer polynomials, ascending degree. Quotient of exact division.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<mpz_class> quo(dn - dd + 1, mpz_class(0));
    for (long i = dn; i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i] / den[dd]; // den monic or +-1 leading in our usage
        quo[i - dd] = c;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quo;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");

    std::function<std::vector<mpz_class>(long)> build = [&](long n) -> std::vector<mpz_class> {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        // X^n - 1 divided by Phi_d for all proper divisors d of n
        std::vector<mpz_class> f(n + 1, mpz_class(0));
        f[0] = -1;
        f[n] = 1;
        for (long d : divisors(n)) {
            if (d == n) continue;
            f = poly_div_exact(f, build(d));
        }
        cache[n] = f;
        return f;
    };
    build(m);
    return cache[m];
}

mpz_class binomial(long n, long k) {
    mpz_class r;
    if (k < 0 || k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class pow_mpz(long base, long exp) {
    if (exp < 0) throw std::invalid_argument("pow_mpz: negative exponent");
    mpz_class r, b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

} // namespace psl
