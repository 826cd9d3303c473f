#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psl/characters.hpp"
#include "psl/eisenstein.hpp"
#include "psl/maass.hpp"
#include "psl/qseries.hpp"

namespace psl {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Experiment configuration for a convergence run: character chi mod p,
 * embedding index, weight sequence k_m = a p^m with a = -alpha mod p-1. */
struct Theorem2Config {
    long p = 5;
    std::string chi_spec = "5:1";
    int sigma_index = 1;
    std::optional<long> a_override;
    int m_max = 3;
    long trunc_N = 2;
    int prec_M = 10;
    long bernoulli_cap = 1750;
    bool allow_large = false;
};

struct ResolvedConfig {
    Theorem2Config raw;
    DirichletCharacter chi;
    EmbeddingSigma sigma;
    long alpha = 0;
    long a = 0;

    long p() const { return raw.p; }
    long k_m(int m) const;
    long l_m(int m) const;
    long limit_class() const { return ((-alpha) % (raw.p - 1) + (raw.p - 1)) % (raw.p - 1); }

    ResolvedConfig(DirichletCharacter c, EmbeddingSigma s) : chi(std::move(c)), sigma(std::move(s)) {}
};

ResolvedConfig resolve(const Theorem2Config& cfg);

JacobiSeries<CyclotomicNumber> build_phi_km(const ResolvedConfig& rc, int m);

struct StageForms {
    JacobiSeries<CyclotomicNumber> phi;
    SiegelSeries<CyclotomicNumber> lift; // Maass lift of phi, constant term (1/2)L
    SiegelSeries<CyclotomicNumber> G;    // normalized: 2 L^{-1} * lift, constant term 1
    SiegelSeries<PadicApprox> G_sigma;   // coefficientwise sigma-image
};

StageForms build_G_km(const ResolvedConfig& rc, int m);

enum class Outcome { Pass, Fail, PrecisionInsufficient };

struct DeltaEntry {
    SiegelIndexKey key;
    long v = 0;      // valuation, meaningful when !capped
    bool capped = false; // ">= M": zero to the reported precision
};

struct StageResult {
    int m = 0;
    long k_m = 0;
    std::string km_mod_pM; // k_m in Z_p, echoed mod p^M
    long km_class = 0;     // k_m mod p-1
    std::vector<DeltaEntry> table;
    SeriesDistance min_dist;
    bool row0_ok = true; // l=0 row vs the divisor-sum formula, full precision
    StageForms forms;
};

struct ESeriesStep {
    int m_from = 0, m_to = 0;
    long min_v = 0;
    bool defined = true; // false if every compared coefficient pair is equal
    std::vector<std::pair<long, long>> per_n; // (n, valuation) for nonzero diffs
};

struct Theorem2Report {
    Theorem2Config config;
    long alpha = 0, a = 0, limit_class = 0;
    int effective_M = 0; // after any retry
    bool retried = false;
    std::vector<StageResult> stages;
    std::vector<ESeriesStep> eisenstein_steps; // level-1 factor convergence, n <= 10
    Outcome outcome = Outcome::Fail;
    std::string note;
};

Theorem2Report convergence_report(const Theorem2Config& cfg);

struct Lemma2Row {
    int m = 0;
    long l = 0;
    long vp_l = 0;
    bool p1_divides = false; // (p-1) | l_m
    long vp_const = 0;       // v_p(B_l / 2l)
    bool ok = false;
};

struct Lemma2Report {
    long p = 0, a = 0;
    int m_max = 0;
    std::vector<Lemma2Row> rows;
    bool pass = false;
};

Lemma2Report lemma2_check(long p, long a, int m_max);

struct Theorem1Stage {
    int m = 0;
    long k_m = 0;
    long product_weight = 0;
    bool character_trivial = false;
    bool weight_even = false;
    SeriesDistance dist; // min_T v_p((F G_m)^sigma(T) - F^sigma(T)), exact
    std::vector<DeltaEntry> table;
};

struct Theorem1Report {
    Theorem2Config config; // the chi^{-1} sequence configuration
    long alpha = 0, a = 0;
    std::string f_character;
    long f_weight = 0;
    std::vector<Theorem1Stage> stages;
    Outcome outcome = Outcome::Fail;
    std::string note;
};

// F must carry the inverse of the configured sequence character.
Theorem1Report theorem1_product_run(const SiegelSeries<CyclotomicNumber>& F,
                                    const Theorem2Config& cfg);

struct UnitCongResult {
    enum class Verdict { Pass, Fail, NonIntegral } verdict = Verdict::Pass;
    std::optional<SiegelIndexKey> witness;
    long witness_val = 0;
};

// True iff v_p(G^sigma(T) - [T=O]) >= 1 on the stored support; a coefficient
// with negative sigma-valuation is reported as NonIntegral instead.
UnitCongResult unit_congruence_check(const SiegelSeries<CyclotomicNumber>& G,
                                     const EmbeddingSigma& sigma, long p);

// Two p-adic values agree to relative precision M (same valuation, units
// congruent mod p^M).
bool padic_same_to_relative(const PadicApprox& x, const PadicApprox& y, int M);

} // namespace psl
