#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "psl/characters.hpp"
#include "psl/cyclotomic.hpp"
#include "psl/numutil.hpp"
#include "psl/padic.hpp"
#include "psl/rational.hpp"

namespace psl {

// The three admitted coefficient rings: Rational, CyclotomicNumber,
// PadicApprox. Default construction is the additive identity.
template <typename R>
concept CoefficientRing = std::default_initializable<R> && requires(const R a, const R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

enum class SeriesKind { Elliptic, JacobiIndex1, SiegelDeg2 };

/* Weight / character / level bookkeeping. Multiplication adds weights,
 * multiplies characters and takes the lcm of levels. */
struct FormMeta {
    long weight = 0;
    std::optional<DirichletCharacter> character; // nullopt = trivial
    long level = 1;
    SeriesKind kind = SeriesKind::Elliptic;

    bool character_trivial() const { return !character || character->is_principal(); }

    static std::optional<DirichletCharacter> combine_characters(
        const std::optional<DirichletCharacter>& a, const std::optional<DirichletCharacter>& b) {
        if (!a) return b;
        if (!b) return a;
        return *a * *b;
    }

    FormMeta combined_with(const FormMeta& o, SeriesKind result_kind) const {
        FormMeta m;
        m.weight = weight + o.weight;
        m.character = combine_characters(character, o.character);
        m.level = lcm_ll(level, o.level);
        m.kind = result_kind;
        return m;
    }

    bool operator==(const FormMeta& o) const {
        bool chars_equal = (!character && !o.character) ||
                           (character && o.character && *character == *o.character);
        return weight == o.weight && chars_equal && level == o.level && kind == o.kind;
    }
};

struct JacobiIndexKey {
    long n = 0, r = 0;
    auto operator<=>(const JacobiIndexKey&) const = default;
};

struct SiegelIndexKey {
    long n = 0, r = 0, l = 0;
    auto operator<=>(const SiegelIndexKey&) const = default;
    bool is_origin() const { return n == 0 && r == 0 && l == 0; }
};

/* q-expansion a(0..N) of a degree-1 form; dense storage. */
template <CoefficientRing R>
struct EllipticSeries {
    long trunc = 0;
    std::vector<R> a; // size trunc+1
    FormMeta meta;

    EllipticSeries() = default;
    EllipticSeries(long N, FormMeta m) : trunc(N), a(N + 1), meta(std::move(m)) {}

    const R& at(long n) const {
        if (n < 0 || n > trunc) throw std::out_of_range("EllipticSeries: index beyond truncation");
        return a[n];
    }

    bool operator==(const EllipticSeries& o) const {
        return trunc == o.trunc && a == o.a && meta == o.meta;
    }
};

/* Jacobi form of index 1: c(n,r) on the support 4n - r^2 >= 0, n <= trunc. */
template <CoefficientRing R>
struct JacobiSeries {
    long trunc = 0;
    std::map<JacobiIndexKey, R> c;
    FormMeta meta;

    // Every admissible (n, r) with 0 <= n <= N, lexicographic.
    static std::vector<JacobiIndexKey> support(long N) {
        std::vector<JacobiIndexKey> keys;
        for (long n = 0; n <= N; ++n) {
            long rmax = static_cast<long>(std::sqrt(static_cast<double>(4 * n)));
            while ((rmax + 1) * (rmax + 1) <= 4 * n) ++rmax;
            while (rmax * rmax > 4 * n) --rmax;
            for (long r = -rmax; r <= rmax; ++r) keys.push_back({n, r});
        }
        return keys;
    }

    R at(long n, long r) const {
        auto it = c.find({n, r});
        return it == c.end() ? R{} : it->second;
    }

    bool operator==(const JacobiSeries& o) const {
        return trunc == o.trunc && c == o.c && meta == o.meta;
    }
};

/* Degree-2 Siegel expansion a(n,r,l) indexed by half-integral matrices
 * [[n, r/2], [r/2, l]] with n, l <= trunc and 4nl - r^2 >= 0. */
template <CoefficientRing R>
struct SiegelSeries {
    long trunc = 0;
    std::map<SiegelIndexKey, R> a;
    FormMeta meta;

    static bool in_support(long N, long n, long r, long l) {
        return n >= 0 && l >= 0 && n <= N && l <= N && 4 * n * l - r * r >= 0;
    }

    static std::vector<SiegelIndexKey> support(long N) {
        std::vector<SiegelIndexKey> keys;
        for (long n = 0; n <= N; ++n)
            for (long r = -2 * N; r <= 2 * N; ++r)
                for (long l = 0; l <= N; ++l)
                    if (4 * n * l - r * r >= 0) keys.push_back({n, r, l});
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    R at(long n, long r, long l) const {
        auto it = a.find({n, r, l});
        return it == a.end() ? R{} : it->second;
    }

    bool operator==(const SiegelSeries& o) const {
        return trunc == o.trunc && a == o.a && meta == o.meta;
    }
};

/* One Fourier-Jacobi row {(n, r) -> a(n, r, l)} of a Siegel expansion;
 * a Jacobi-form-shaped table of index l (support 4nl - r^2 >= 0). */
template <CoefficientRing R>
struct FourierJacobiRow {
    long l = 0;
    long trunc = 0;
    std::map<JacobiIndexKey, R> entries;
};

// ---- operations ----

template <CoefficientRing R>
EllipticSeries<R> elliptic_mul(const EllipticSeries<R>& f, const EllipticSeries<R>& g) {
    EllipticSeries<R> h(std::min(f.trunc, g.trunc),
                        f.meta.combined_with(g.meta, SeriesKind::Elliptic));
    for (long n = 0; n <= h.trunc; ++n) {
        R s{};
        for (long j = 0; j <= n; ++j) {
            if (f.a[j].is_zero() || g.a[n - j].is_zero()) continue;
            s = s + f.a[j] * g.a[n - j];
        }
        h.a[n] = s;
    }
    return h;
}

template <CoefficientRing R>
JacobiSeries<R> jacobi_mul_elliptic(const JacobiSeries<R>& phi, const EllipticSeries<R>& f) {
    if (f.trunc < phi.trunc)
        throw std::invalid_argument("jacobi_mul_elliptic: elliptic factor truncated too early");
    JacobiSeries<R> h;
    h.trunc = phi.trunc;
    h.meta = phi.meta.combined_with(f.meta, SeriesKind::JacobiIndex1);
    for (const auto& key : JacobiSeries<R>::support(h.trunc)) {
        R s{};
        for (long j = 0; j <= key.n; ++j) {
            if (f.a[j].is_zero()) continue;
            auto it = phi.c.find({key.n - j, key.r});
            if (it == phi.c.end() || it->second.is_zero()) continue;
            s = s + f.a[j] * it->second;
        }
        h.c[key] = s;
    }
    return h;
}

/* Cauchy product over the degree-2 index lattice. Sums of stored
 * (positive-semidefinite) indices stay in the lattice; this is asserted. */
template <CoefficientRing R>
SiegelSeries<R> siegel_mul(const SiegelSeries<R>& F, const SiegelSeries<R>& G) {
    SiegelSeries<R> H;
    H.trunc = std::min(F.trunc, G.trunc);
    H.meta = F.meta.combined_with(G.meta, SeriesKind::SiegelDeg2);
    for (const auto& key : SiegelSeries<R>::support(H.trunc)) H.a[key] = R{};
    for (const auto& [k1, v1] : F.a) {
        if (v1.is_zero()) continue;
        for (const auto& [k2, v2] : G.a) {
            if (v2.is_zero()) continue;
            SiegelIndexKey k{k1.n + k2.n, k1.r + k2.r, k1.l + k2.l};
            if (k.n > H.trunc || k.l > H.trunc) continue;
            if (!SiegelSeries<R>::in_support(H.trunc, k.n, k.r, k.l))
                throw std::logic_error("siegel_mul: product index left the lattice");
            H.a[k] = H.a[k] + v1 * v2;
        }
    }
    return H;
}

template <CoefficientRing R>
SiegelSeries<R> siegel_sub(const SiegelSeries<R>& F, const SiegelSeries<R>& G) {
    if (F.trunc != G.trunc) throw std::invalid_argument("siegel_sub: truncation mismatch");
    SiegelSeries<R> H = F;
    for (const auto& [k, v] : G.a) {
        auto it = H.a.find(k);
        if (it == H.a.end())
            H.a[k] = R{} - v;
        else
            it->second = it->second - v;
    }
    return H;
}

struct MorphismError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <CoefficientRing R, typename F>
auto map_coefficients(const EllipticSeries<R>& s, F&& morphism)
    -> EllipticSeries<std::decay_t<decltype(morphism(std::declval<R>()))>> {
    using R2 = std::decay_t<decltype(morphism(std::declval<R>()))>;
    EllipticSeries<R2> out(s.trunc, s.meta);
    for (long n = 0; n <= s.trunc; ++n) {
        try {
            out.a[n] = morphism(s.a[n]);
        } catch (const std::exception& e) {
            throw MorphismError("coefficient map failed at n=" + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

template <CoefficientRing R, typename F>
auto map_coefficients(const JacobiSeries<R>& s, F&& morphism)
    -> JacobiSeries<std::decay_t<decltype(morphism(std::declval<R>()))>> {
    using R2 = std::decay_t<decltype(morphism(std::declval<R>()))>;
    JacobiSeries<R2> out;
    out.trunc = s.trunc;
    out.meta = s.meta;
    for (const auto& [k, v] : s.c) {
        try {
            out.c[k] = morphism(v);
        } catch (const std::exception& e) {
            throw MorphismError("coefficient map failed at (n,r)=(" + std::to_string(k.n) + "," +
                                std::to_string(k.r) + "): " + e.what());
        }
    }
    return out;
}

template <CoefficientRing R, typename F>
auto map_coefficients(const SiegelSeries<R>& s, F&& morphism)
    -> SiegelSeries<std::decay_t<decltype(morphism(std::declval<R>()))>> {
    using R2 = std::decay_t<decltype(morphism(std::declval<R>()))>;
    SiegelSeries<R2> out;
    out.trunc = s.trunc;
    out.meta = s.meta;
    for (const auto& [k, v] : s.a) {
        try {
            out.a[k] = morphism(v);
        } catch (const std::exception& e) {
            throw MorphismError("coefficient map failed at (n,r,l)=(" + std::to_string(k.n) + "," +
                                std::to_string(k.r) + "," + std::to_string(k.l) + "): " + e.what());
        }
    }
    return out;
}

template <CoefficientRing R>
FourierJacobiRow<R> fourier_jacobi_row(const SiegelSeries<R>& F, long l) {
    if (l < 0 || l > F.trunc) throw std::out_of_range("fourier_jacobi_row: l beyond truncation");
    FourierJacobiRow<R> row;
    row.l = l;
    row.trunc = F.trunc;
    for (const auto& [k, v] : F.a)
        if (k.l == l) row.entries[{k.n, k.r}] = v;
    return row;
}

template <CoefficientRing R>
SiegelSeries<R> reassemble_rows(const std::vector<FourierJacobiRow<R>>& rows, long trunc,
                                const FormMeta& meta) {
    SiegelSeries<R> F;
    F.trunc = trunc;
    F.meta = meta;
    for (const auto& row : rows)
        for (const auto& [k, v] : row.entries) F.a[{k.n, k.r, row.l}] = v;
    return F;
}

/* Minimum valuation of the coefficientwise difference of two expansions over
 * PadicApprox, with the attaining index. "AtLeast" means every difference is
 * zero to the stated precision and the minimum cannot be resolved below it. */
struct SeriesDistance {
    enum class Kind { Infinite, AtLeast, Finite } kind = Kind::Infinite;
    long value = 0;               // valuation (Finite) or lower bound (AtLeast)
    SiegelIndexKey argmin{};      // meaningful for Finite
};

class DistanceAccumulator {
public:
    void add(const PadicApprox& diff, const SiegelIndexKey& where) {
        if (diff.is_exact_zero()) return;
        long v = diff.valuation();
        if (diff.is_zero_to_precision()) {
            if (!have_bound_ || v < min_bound_) min_bound_ = v;
            have_bound_ = true;
        } else {
            if (!have_finite_ || v < min_finite_) {
                min_finite_ = v;
                argmin_ = where;
            }
            have_finite_ = true;
        }
    }

    SeriesDistance result() const {
        SeriesDistance d;
        if (!have_finite_ && !have_bound_) return d; // Infinite
        // the minimum is resolved exactly when every unresolved entry is
        // bounded below by the smallest resolved valuation
        if (have_finite_ && (!have_bound_ || min_bound_ >= min_finite_)) {
            d.kind = SeriesDistance::Kind::Finite;
            d.value = min_finite_;
            d.argmin = argmin_;
        } else {
            d.kind = SeriesDistance::Kind::AtLeast;
            d.value = min_bound_;
        }
        return d;
    }

private:
    bool have_finite_ = false, have_bound_ = false;
    long min_finite_ = 0, min_bound_ = 0;
    SiegelIndexKey argmin_{};
};

inline SeriesDistance series_distance(const SiegelSeries<PadicApprox>& s1,
                                      const SiegelSeries<PadicApprox>& s2) {
    if (s1.trunc != s2.trunc) throw std::invalid_argument("series_distance: support mismatch");
    DistanceAccumulator acc;
    for (const auto& k : SiegelSeries<PadicApprox>::support(s1.trunc)) {
        PadicApprox a = s1.at(k.n, k.r, k.l), b = s2.at(k.n, k.r, k.l);
        if (a == b) continue; // identical approximations: difference is exactly 0
        acc.add(a - b, k);
    }
    return acc.result();
}

inline SeriesDistance series_distance(const EllipticSeries<PadicApprox>& s1,
                                      const EllipticSeries<PadicApprox>& s2) {
    if (s1.trunc != s2.trunc) throw std::invalid_argument("series_distance: support mismatch");
    DistanceAccumulator acc;
    for (long n = 0; n <= s1.trunc; ++n) {
        if (s1.a[n] == s2.a[n]) continue;
        acc.add(s1.a[n] - s2.a[n], {n, 0, 0});
    }
    return acc.result();
}

template <CoefficientRing R>
SiegelSeries<R> siegel_scaled(const SiegelSeries<R>& F, const R& cst) {
    SiegelSeries<R> H = F;
    for (auto& [k, v] : H.a) v = v * cst;
    return H;
}

// The constant expansion 1 on the full support of truncation N.
template <CoefficientRing R>
SiegelSeries<R> siegel_one(long N, const R& one_value, FormMeta meta = {}) {
    SiegelSeries<R> F;
    F.trunc = N;
    meta.kind = SeriesKind::SiegelDeg2;
    F.meta = meta;
    for (const auto& k : SiegelSeries<R>::support(N)) F.a[k] = k.is_origin() ? one_value : R{};
    return F;
}

template <CoefficientRing R>
EllipticSeries<R> elliptic_one(long N, const R& one_value, FormMeta meta = {}) {
    EllipticSeries<R> f(N, meta);
    f.a[0] = one_value;
    return f;
}

} // namespace psl
