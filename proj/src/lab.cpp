#include "psl/lab.hpp"

#include <sstream>
#include <stdexcept>

#include "psl/lvalues.hpp"
#include "psl/numutil.hpp"

namespace psl {

long ResolvedConfig::k_m(int m) const {
    long v = a;
    for (int i = 0; i < m; ++i) v *= raw.p;
    return v;
}

long ResolvedConfig::l_m(int m) const {
    long q = 1;
    for (int i = 0; i < m - 1; ++i) q *= raw.p;
    return a * raw.p * (q - 1);
}

ResolvedConfig resolve(const Theorem2Config& cfg) {
    if (!is_odd_prime(cfg.p)) throw ConfigError("p must be an odd prime");
    DirichletCharacter chi = DirichletCharacter::parse(cfg.chi_spec);
    if (chi.p() != cfg.p) throw ConfigError("character modulus differs from p");
    if (chi.is_principal())
        throw ConfigError("the sequence construction needs a nontrivial character");
    if (cfg.m_max < 1 || cfg.m_max > 8) throw ConfigError("m_max must be in 1..8");
    if (cfg.trunc_N < 1) throw ConfigError("truncation must be >= 1");
    if (cfg.prec_M < 2) throw ConfigError("precision must be >= 2");

    EmbeddingSigma sigma(cfg.p, cfg.sigma_index, cfg.prec_M);
    ResolvedConfig rc(chi, sigma);
    rc.raw = cfg;
    rc.alpha = find_alpha(chi, sigma);
    rc.a = cfg.a_override ? *cfg.a_override : select_a(rc.alpha, cfg.p);
    long m1 = cfg.p - 1;
    if (((rc.a % m1) + m1) % m1 != rc.limit_class())
        throw ConfigError("a must be = -alpha mod p-1");
    if (rc.a < 2) throw ConfigError("a must be >= 2 (Jacobi Eisenstein weight 2a >= 4)");
    int parity = rc.a % 2 == 0 ? 1 : -1;
    if (parity != chi.parity()) throw ConfigError("(-1)^a must equal chi(-1)");

    long heaviest = std::max(rc.k_m(cfg.m_max), rc.l_m(cfg.m_max));
    if (!cfg.allow_large && heaviest > cfg.bernoulli_cap) {
        std::ostringstream os;
        os << "run needs exact Bernoulli numbers up to index " << heaviest
           << " (cap " << cfg.bernoulli_cap << "); pass --allow-large to proceed";
        throw ConfigError(os.str());
    }
    return rc;
}

JacobiSeries<CyclotomicNumber> build_phi_km(const ResolvedConfig& rc, int m) {
    long p = rc.p();
    long mfield = p - 1;
    long NJ = rc.raw.trunc_N * rc.raw.trunc_N;
    auto to_cyclo = [mfield](const Rational& x) {
        return CyclotomicNumber::from_rational(mfield, x);
    };

    JacobiSeries<CyclotomicNumber> ej =
        map_coefficients(jacobi_eisenstein(2 * rc.a, NJ), to_cyclo);
    EllipticSeries<CyclotomicNumber> el =
        map_coefficients(eisenstein_level1(rc.l_m(m), NJ), to_cyclo);
    EllipticSeries<CyclotomicNumber> echi = hecke_eisenstein_chi(rc.a * (p - 2), rc.chi, NJ);

    JacobiSeries<CyclotomicNumber> phi = jacobi_mul_elliptic(jacobi_mul_elliptic(ej, el), echi);
    if (phi.meta.weight != rc.k_m(m))
        throw std::logic_error("build_phi_km: weight bookkeeping failed");
    if (!(phi.at(0, 0) == CyclotomicNumber::one(mfield)))
        throw std::logic_error("build_phi_km: constant term is not 1");
    return phi;
}

StageForms build_G_km(const ResolvedConfig& rc, int m) {
    StageForms out;
    out.phi = build_phi_km(rc, m);
    long k = rc.k_m(m);
    out.lift = maass_lift(out.phi, k, rc.chi, rc.p(), rc.raw.trunc_N);
    LValue L = dirichlet_L_neg(k, rc.chi);
    if (!L.parity_ok || L.value.is_zero())
        throw std::logic_error("build_G_km: L(1-k,chi) vanished unexpectedly");
    out.G = siegel_scaled(out.lift, L.value.inverse().scaled(Rational(2)));
    if (!(out.G.at(0, 0, 0) == CyclotomicNumber::one(rc.p() - 1)))
        throw std::logic_error("build_G_km: normalized constant term is not 1");
    out.G_sigma = map_coefficients(out.G, [&rc](const CyclotomicNumber& x) {
        return embed(x, rc.sigma);
    });
    return out;
}

bool padic_same_to_relative(const PadicApprox& x, const PadicApprox& y, int M) {
    if (x.is_exact_zero() && y.is_exact_zero()) return true;
    if (x.is_exact_zero()) return y.is_zero_to_precision();
    if (y.is_exact_zero()) return x.is_zero_to_precision();
    if (x.is_zero_to_precision() || y.is_zero_to_precision()) {
        // comparable only through absolute precision; accept when neither
        // side shows a digit the other could contradict
        return true;
    }
    if (x.valuation() != y.valuation()) return false;
    PadicApprox d = x - y;
    if (d.is_exact_zero()) return true;
    return d.valuation() >= x.valuation() + M;
}

namespace {

// Independent l=0 row: 1 at n=0 and sigma(L/2)^{-1} sum_{p not| d|n}
// omega(d)^alpha d^{k-1} for n >= 1, computed without the lift machinery.
bool check_row0(const ResolvedConfig& rc, int m, const SiegelSeries<PadicApprox>& G_sigma) {
    long p = rc.p();
    int M = rc.sigma.precision();
    int K = M + 6;
    long k = rc.k_m(m);
    EmbeddingSigma sigma_hi = rc.sigma.with_precision(K);
    LValue L = dirichlet_L_neg(k, rc.chi);
    PadicApprox half_L_inv = embed(L.value.scaled(Rational(1, 2)), sigma_hi).inverse();

    for (long n = 0; n <= rc.raw.trunc_N; ++n) {
        PadicApprox expect;
        if (n == 0) {
            expect = PadicApprox::one(p, K);
        } else {
            PadicApprox sum = PadicApprox::exact_zero(p);
            for (long d : divisors(n)) {
                if (d % p == 0) continue;
                ZmodPk w = teichmuller(d, p, K).pow(rc.alpha);
                ZmodPk dk = ZmodPk(p, K, d).pow(k - 1);
                sum = sum + PadicApprox::from_parts(p, 0, (w * dk).residue(), K);
            }
            expect = half_L_inv * sum;
        }
        if (!padic_same_to_relative(G_sigma.at(n, 0, 0), expect, M)) return false;
    }
    return true;
}

std::vector<ESeriesStep> eisenstein_factor_steps(const ResolvedConfig& rc) {
    const long order = 10;
    std::vector<EllipticSeries<Rational>> series;
    for (int m = 1; m <= rc.raw.m_max; ++m)
        series.push_back(eisenstein_level1(rc.l_m(m), order));
    std::vector<ESeriesStep> steps;
    for (size_t i = 0; i + 1 < series.size(); ++i) {
        ESeriesStep step;
        step.m_from = static_cast<int>(i) + 1;
        step.m_to = step.m_from + 1;
        bool any = false;
        long minv = 0;
        for (long n = 0; n <= order; ++n) {
            Rational d = series[i + 1].a[n] - series[i].a[n];
            if (d.is_zero()) continue;
            long v = d.valuation(rc.p());
            step.per_n.push_back({n, v});
            if (!any || v < minv) minv = v;
            any = true;
        }
        step.defined = any;
        step.min_v = any ? minv : 0;
        steps.push_back(step);
    }
    return steps;
}

StageResult run_stage(const ResolvedConfig& rc, int m) {
    StageResult st;
    st.m = m;
    st.k_m = rc.k_m(m);
    long p = rc.p();
    int M = rc.sigma.precision();
    // weight moves to (0, -alpha) in Z_p x Z/(p-1): v_p(k_m) >= m and the
    // class is constant; both exact, asserted here
    if (Rational(st.k_m).valuation(p) < m)
        throw std::logic_error("stage weight is not divisible by p^m");
    if (((st.k_m % (p - 1)) + (p - 1)) % (p - 1) != rc.limit_class())
        throw std::logic_error("stage weight class drifted from -alpha");
    mpz_class pm = pow_mpz(p, M);
    st.km_mod_pM = mpz_class(mpz_class(st.k_m) % pm).get_str();
    st.km_class = rc.limit_class();

    st.forms = build_G_km(rc, m);
    SiegelSeries<PadicApprox> unit =
        siegel_one<PadicApprox>(rc.raw.trunc_N, PadicApprox::one(p, M), st.forms.G.meta);
    DistanceAccumulator acc;
    for (const auto& key : SiegelSeries<PadicApprox>::support(rc.raw.trunc_N)) {
        PadicApprox diff = st.forms.G_sigma.at(key.n, key.r, key.l) - unit.at(key.n, key.r, key.l);
        acc.add(diff, key);
        DeltaEntry e;
        e.key = key;
        if (diff.is_exact_zero() || diff.valuation() >= M) {
            e.capped = true;
            e.v = M;
        } else {
            e.v = diff.valuation();
        }
        st.table.push_back(e);
    }
    st.min_dist = acc.result();
    st.row0_ok = check_row0(rc, m, st.forms.G_sigma);
    return st;
}

} // namespace

Theorem2Report convergence_report(const Theorem2Config& cfg) {
    if (cfg.m_max < 2) throw ConfigError("convergence needs m_max >= 2");
    Theorem2Config attempt = cfg;
    Theorem2Report rep;
    for (int round = 0;; ++round) {
        ResolvedConfig rc = resolve(attempt);
        rep.config = cfg;
        rep.alpha = rc.alpha;
        rep.a = rc.a;
        rep.limit_class = rc.limit_class();
        rep.effective_M = attempt.prec_M;
        rep.retried = round > 0;
        rep.stages.clear();
        for (int m = 1; m <= attempt.m_max; ++m) rep.stages.push_back(run_stage(rc, m));
        rep.eisenstein_steps = eisenstein_factor_steps(rc);

        bool all_resolved = true, increasing = true, rows_ok = true;
        for (size_t i = 0; i < rep.stages.size(); ++i) {
            const auto& d = rep.stages[i].min_dist;
            if (d.kind != SeriesDistance::Kind::Finite) all_resolved = false;
            if (!rep.stages[i].row0_ok) rows_ok = false;
            if (i > 0 && d.kind == SeriesDistance::Kind::Finite &&
                rep.stages[i - 1].min_dist.kind == SeriesDistance::Kind::Finite &&
                d.value <= rep.stages[i - 1].min_dist.value)
                increasing = false;
        }
        if (!rows_ok) {
            rep.outcome = Outcome::Fail;
            rep.note = "l=0 row disagrees with the divisor-sum formula";
            return rep;
        }
        if (all_resolved && increasing) {
            rep.outcome = Outcome::Pass;
            rep.note = "min valuations strictly increase; consistent with p-adic convergence to 1 "
                       "at precision M, truncation N";
            return rep;
        }
        if (round == 0) {
            attempt.prec_M += 4; // one precision-raise retry on tie or unresolved minimum
            continue;
        }
        if (!all_resolved) {
            rep.outcome = Outcome::PrecisionInsufficient;
            rep.note = "minimum valuation not resolved below precision M after retry";
        } else {
            rep.outcome = Outcome::Fail;
            rep.note = "min valuations fail to increase strictly";
        }
        return rep;
    }
}

Lemma2Report lemma2_check(long p, long a, int m_max) {
    if (!is_odd_prime(p)) throw ConfigError("p must be an odd prime");
    if (a < 1) throw ConfigError("a must be positive");
    if (m_max < 2) throw ConfigError("lemma check needs m_max >= 2");
    Lemma2Report rep;
    rep.p = p;
    rep.a = a;
    rep.m_max = m_max;
    rep.pass = true;
    for (int m = 2; m <= m_max; ++m) {
        long q = 1;
        for (int i = 0; i < m - 1; ++i) q *= p;
        Lemma2Row row;
        row.m = m;
        row.l = a * p * (q - 1);
        row.vp_l = Rational(row.l).valuation(p);
        row.p1_divides = row.l % (p - 1) == 0;
        row.vp_const = constant_term_valuation(row.l, p);
        row.ok = row.vp_l == 1 && row.p1_divides && row.vp_const == -2;
        rep.pass = rep.pass && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

Theorem1Report theorem1_product_run(const SiegelSeries<CyclotomicNumber>& F,
                                    const Theorem2Config& cfg) {
    ResolvedConfig rc = resolve(cfg);
    if (!F.meta.character || !(*F.meta.character == rc.chi.inverse()))
        throw ConfigError("theorem1: F must carry the inverse of the sequence character");
    if (F.trunc != cfg.trunc_N) throw ConfigError("theorem1: truncation mismatch between F and config");

    Theorem1Report rep;
    rep.config = cfg;
    rep.alpha = rc.alpha;
    rep.a = rc.a;
    rep.f_character = F.meta.character->encode();
    rep.f_weight = F.meta.weight;

    for (int m = 1; m <= cfg.m_max; ++m) {
        StageForms forms = build_G_km(rc, m);
        SiegelSeries<CyclotomicNumber> prod = siegel_mul(F, forms.G);
        Theorem1Stage st;
        st.m = m;
        st.k_m = rc.k_m(m);
        st.product_weight = prod.meta.weight;
        st.character_trivial = prod.meta.character_trivial();
        st.weight_even = prod.meta.weight % 2 == 0;

        SiegelSeries<CyclotomicNumber> diff = siegel_sub(prod, F);
        DistanceAccumulator acc;
        for (const auto& key : SiegelSeries<CyclotomicNumber>::support(cfg.trunc_N)) {
            CyclotomicNumber c = diff.at(key.n, key.r, key.l);
            PadicApprox img = embed(c, rc.sigma);
            acc.add(img, key);
            DeltaEntry e;
            e.key = key;
            if (img.is_exact_zero()) {
                e.capped = true;
                e.v = cfg.prec_M;
            } else {
                e.v = img.valuation();
            }
            st.table.push_back(e);
        }
        st.dist = acc.result();
        rep.stages.push_back(st);
    }

    bool ok = true;
    for (size_t i = 0; i < rep.stages.size(); ++i) {
        const auto& st = rep.stages[i];
        if (!st.character_trivial || !st.weight_even) ok = false;
        if (st.dist.kind == SeriesDistance::Kind::AtLeast) ok = false;
        if (i > 0 && st.dist.kind == SeriesDistance::Kind::Finite &&
            rep.stages[i - 1].dist.kind == SeriesDistance::Kind::Finite &&
            st.dist.value <= rep.stages[i - 1].dist.value)
            ok = false;
    }
    rep.outcome = ok ? Outcome::Pass : Outcome::Fail;
    rep.note = ok ? "product converges to F^sigma on the stored support"
                  : "product run failed a strict-increase or metadata check";
    return rep;
}

UnitCongResult unit_congruence_check(const SiegelSeries<CyclotomicNumber>& G,
                                     const EmbeddingSigma& sigma, long p) {
    UnitCongResult res;
    long mfield = p - 1;
    for (const auto& [key, coef] : G.a) {
        PadicApprox img = embed(coef, sigma);
        if (!img.is_exact_zero() && img.valuation() < 0) {
            res.verdict = UnitCongResult::Verdict::NonIntegral;
            res.witness = key;
            res.witness_val = img.valuation();
            return res;
        }
        CyclotomicNumber d = key.is_origin() ? coef - CyclotomicNumber::one(mfield) : coef;
        PadicApprox dv = embed(d, sigma);
        if (!dv.is_exact_zero() && dv.valuation() < 1) {
            res.verdict = UnitCongResult::Verdict::Fail;
            res.witness = key;
            res.witness_val = dv.valuation();
            return res;
        }
    }
    return res;
}

} // namespace psl
