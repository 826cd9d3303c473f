#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "psl/cache.hpp"
#include "psl/eisenstein.hpp"
#include "psl/lab.hpp"
#include "psl/lvalues.hpp"
#include "psl/report.hpp"
#include "psl/series_json.hpp"

using namespace psl;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUsage = 64;

struct GlobalOpts {
    int prec = 10;
    long trunc = 2;
    std::optional<std::string> cache_dir;
    std::optional<std::string> out;
    std::string format; // empty: text to stdout, json to --out
    bool allow_large = false;
};

ReportFormat pick_format(const GlobalOpts& g) {
    if (!g.format.empty()) return parse_format(g.format);
    return g.out ? ReportFormat::Json : ReportFormat::Text;
}

void emit(const GlobalOpts& g, const std::string& rendered, const std::string& summary) {
    if (g.out) {
        std::ofstream f(*g.out);
        if (!f) throw std::runtime_error("cannot write " + *g.out);
        f << rendered;
        std::cout << summary << " -> " << *g.out << "\n";
    } else {
        std::cout << rendered;
    }
}

std::string cache_file(const std::string& dir) {
    std::filesystem::create_directories(dir);
    return dir + "/values.json";
}

std::string poly_str(const std::vector<mpz_class>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i) {
        if (coeffs[i] == 0) continue;
        mpz_class c = coeffs[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class ac = abs(c);
        if (ac != 1 || i == 0) os << ac.get_str();
        if (i >= 1) os << "X";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int run_embeddings(const GlobalOpts& g, long p) {
    auto roots = factor_cyclotomic_mod_p(p);
    const auto& phi = cyclotomic_polynomial(p - 1);
    std::ostringstream factored;
    for (long d : roots) factored << "(X - " << d << ")";
    if (pick_format(g) == ReportFormat::Json) {
        json omegas = json::array();
        for (long d : roots) omegas.push_back(teichmuller(d, p, g.prec).residue().get_str());
        json j{{"p", p},
               {"conductor", p - 1},
               {"phi", poly_str(phi)},
               {"phi_mod_p", factored.str()},
               {"roots", roots},
               {"omega_mod_pM", omegas},
               {"prec", g.prec}};
        emit(g, j.dump(1) + "\n", "embeddings");
        return kExitPass;
    }
    std::ostringstream os;
    os << "p = " << p << "\n";
    os << "Phi_" << (p - 1) << "(X) = " << poly_str(phi) << "\n";
    os << "Phi_" << (p - 1) << "(X) = " << factored.str() << " mod " << p << "\n";
    os << "roots:";
    for (long d : roots) os << " " << d;
    os << "\n";
    for (size_t i = 0; i < roots.size(); ++i)
        os << "sigma_" << (i + 1) << ": zeta_" << (p - 1) << " -> omega(" << roots[i] << ") = "
           << teichmuller(roots[i], p, g.prec).residue().get_str() << " mod " << p << "^" << g.prec
           << "\n";
    emit(g, os.str(), "embeddings");
    return kExitPass;
}

int outcome_exit(Outcome o) {
    switch (o) {
        case Outcome::Pass: return kExitPass;
        case Outcome::Fail: return kExitFail;
        case Outcome::PrecisionInsufficient: return kExitPrecision;
    }
    return kExitFail;
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    json j;
    f >> j;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-expansion laboratory for p-adic Siegel modular forms"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--prec", g.prec, "p-adic precision M (digits)")->capture_default_str();
    app.add_option("--trunc", g.trunc, "Siegel truncation N")->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir,
                   "persistent value cache directory (also PADIC_SIEGEL_CACHE_DIR)");
    app.add_option("--out", g.out, "write the report/series to this file");
    app.add_option("--format", g.format, "output format: json, csv or text");
    app.add_flag("--allow-large", g.allow_large, "permit Bernoulli indices beyond the default cap");

    // embeddings
    long emb_p = 5;
    auto* sc_emb = app.add_subcommand("embeddings", "factor Phi_{p-1} mod p and list the embeddings");
    sc_emb->add_option("--p", emb_p, "odd prime")->required();

    // lvalue
    auto* sc_lv = app.add_subcommand("lvalue", "Bernoulli numbers, L-values, Cohen H");
    std::optional<long> lv_bern;
    std::vector<long> lv_poly, lv_cohen, lv_kummer, lv_valuation;
    std::string lv_chi;
    std::optional<long> lv_k;
    std::optional<long> lv_disc;
    sc_lv->add_option("--bernoulli", lv_bern, "exact B_k");
    sc_lv->add_option("--bernoulli-poly", lv_poly, "k num den: B_k(num/den)")->expected(3);
    sc_lv->add_option("--chi", lv_chi, "character spec p:t for --gen-bernoulli / --l-neg");
    sc_lv->add_option("--k", lv_k, "weight for --gen-bernoulli / --l-neg / --disc");
    sc_lv->add_option("--disc", lv_disc, "fundamental discriminant (with --k)");
    sc_lv->add_option("--cohen-h", lv_cohen, "r N: Cohen H(r, N)")->expected(2);
    sc_lv->add_option("--kummer", lv_kummer, "p k k': Kummer congruence check mod p")->expected(3);
    sc_lv->add_option("--valuation", lv_valuation, "p l: v_p(B_l / 2l)")->expected(2);

    // eisenstein family
    long ek = 4, en = 10;
    auto* sc_e1 = app.add_subcommand("eisenstein", "level-1 Eisenstein series q-expansion");
    sc_e1->add_option("--k", ek, "weight (0 or even >= 4)")->required();
    sc_e1->add_option("--n", en, "truncation order")->capture_default_str();

    long hk = 1, hn = 10;
    std::string hchi;
    auto* sc_he = app.add_subcommand("hecke-eisenstein", "Hecke Eisenstein series with character");
    sc_he->add_option("--k", hk, "weight")->required();
    sc_he->add_option("--chi", hchi, "character spec p:t")->required();
    sc_he->add_option("--n", hn, "truncation order")->capture_default_str();

    long jk = 4, jn = 4;
    auto* sc_je = app.add_subcommand("jacobi-eisenstein", "index-1 Jacobi Eisenstein series");
    sc_je->add_option("--k", jk, "weight (even >= 4)")->required();
    sc_je->add_option("--n", jn, "truncation order")->capture_default_str();

    // lift
    std::string lift_phi, lift_chi;
    long lift_k = 0, lift_p = 0;
    auto* sc_lift = app.add_subcommand("lift", "Maass lift of a serialized Jacobi expansion");
    sc_lift->add_option("--phi", lift_phi, "JacobiSeries JSON file (cyclotomic ring)")->required();
    sc_lift->add_option("--k", lift_k, "weight")->required();
    sc_lift->add_option("--chi", lift_chi, "character spec p:t")->required();
    sc_lift->add_option("--p", lift_p, "odd prime")->required();

    // theorem2
    Theorem2Config t2;
    auto* sc_t2 = app.add_subcommand("theorem2", "convergence run: G_{k_m}^sigma -> 1");
    sc_t2->add_option("--p", t2.p, "odd prime")->required();
    std::string t2_chi = "5:1";
    sc_t2->add_option("--chi", t2_chi, "character spec p:t")->required();
    sc_t2->add_option("--sigma", t2.sigma_index, "embedding index (1-based)")->required();
    std::optional<long> t2_a;
    sc_t2->add_option("--a", t2_a, "override the weight seed a");
    sc_t2->add_option("--mmax", t2.m_max, "largest m")->capture_default_str();

    // theorem1
    Theorem2Config t1;
    std::string t1_chi = "5:3";
    std::optional<std::string> t1_f;
    std::optional<long> t1_a;
    auto* sc_t1 = app.add_subcommand("theorem1", "product run: (F G_{k_m})^sigma -> F^sigma");
    sc_t1->add_option("--chi", t1_chi, "sequence character spec p:t (the inverse of F's)")->required();
    sc_t1->add_option("--sigma", t1.sigma_index, "embedding index")->required();
    sc_t1->add_option("--f", t1_f, "SiegelSeries JSON for F (default: G_{k_1} of the inverse run)");
    sc_t1->add_option("--a", t1_a, "override the weight seed a");
    sc_t1->add_option("--mmax", t1.m_max, "largest m")->capture_default_str();

    // lemma2
    long lm_p = 5, lm_a = 3;
    int lm_mmax = 3;
    auto* sc_lm = app.add_subcommand("lemma2", "constant-term valuation checks for l_m");
    sc_lm->add_option("--p", lm_p, "odd prime")->required();
    sc_lm->add_option("--a", lm_a, "weight seed")->required();
    sc_lm->add_option("--mmax", lm_mmax, "largest m")->capture_default_str();

    // unitcong
    std::string uc_g, uc_sigma;
    auto* sc_uc = app.add_subcommand("unitcong", "check G^sigma = 1 mod p on the stored support");
    sc_uc->add_option("--g", uc_g, "SiegelSeries JSON (cyclotomic ring)")->required();
    sc_uc->add_option("--sigma", uc_sigma, "embedding spec p:i")->required();

    // global flags are accepted after the subcommand name as well
    for (auto* sc : {sc_emb, sc_lv, sc_e1, sc_he, sc_je, sc_lift, sc_t2, sc_t1, sc_lm, sc_uc})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    auto cache_dir = resolve_cache_dir(g.cache_dir);
    if (cache_dir) CacheManifest::load(cache_file(*cache_dir), false);
    auto save_cache = [&] {
        if (cache_dir) CacheManifest::save(cache_file(*cache_dir));
    };

    try {
        if (sc_emb->parsed()) {
            if (!is_odd_prime(emb_p)) throw ConfigError("p must be an odd prime");
            return run_embeddings(g, emb_p);
        }

        if (sc_lv->parsed()) {
            json out = json::object();
            if (lv_bern) out["bernoulli"] = bernoulli(*lv_bern).encode();
            if (!lv_poly.empty())
                out["bernoulli_poly"] =
                    bernoulli_poly_at(lv_poly[0], Rational(lv_poly[1], lv_poly[2])).encode();
            if (!lv_chi.empty() && lv_k) {
                auto chi = DirichletCharacter::parse(lv_chi);
                out["gen_bernoulli"] = generalized_bernoulli(*lv_k, chi).encode();
                LValue L = dirichlet_L_neg(*lv_k, chi);
                out["l_neg"] = L.value.encode();
                out["parity_ok"] = L.parity_ok;
            }
            if (lv_disc && lv_k)
                out["gen_bernoulli_disc"] = generalized_bernoulli_kronecker(*lv_k, *lv_disc).encode();
            if (!lv_cohen.empty()) out["cohen_h"] = cohen_H(lv_cohen[0], lv_cohen[1]).encode();
            if (!lv_kummer.empty()) {
                auto res = kummer_check(lv_kummer[1], lv_kummer[2], lv_kummer[0], 1);
                out["kummer_congruent"] = res.congruent;
            }
            if (!lv_valuation.empty())
                out["constant_term_valuation"] =
                    constant_term_valuation(lv_valuation[1], lv_valuation[0]);
            if (out.empty()) throw ConfigError("lvalue: no operation requested");
            save_cache();
            emit(g, out.dump(1) + "\n", "lvalue");
            return kExitPass;
        }

        if (sc_e1->parsed()) {
            auto s = eisenstein_level1(ek, en);
            save_cache();
            emit(g, series_to_json(s).dump(1) + "\n", "eisenstein");
            return kExitPass;
        }
        if (sc_he->parsed()) {
            auto s = hecke_eisenstein_chi(hk, DirichletCharacter::parse(hchi), hn);
            save_cache();
            emit(g, series_to_json(s).dump(1) + "\n", "hecke-eisenstein");
            return kExitPass;
        }
        if (sc_je->parsed()) {
            auto s = jacobi_eisenstein(jk, jn);
            save_cache();
            emit(g, series_to_json(s).dump(1) + "\n", "jacobi-eisenstein");
            return kExitPass;
        }

        if (sc_lift->parsed()) {
            auto phi = jacobi_cyclotomic_from_json(load_json_file(lift_phi));
            auto F = maass_lift(phi, lift_k, DirichletCharacter::parse(lift_chi), lift_p, g.trunc);
            save_cache();
            emit(g, series_to_json(F).dump(1) + "\n", "lift");
            return kExitPass;
        }

        if (sc_t2->parsed()) {
            t2.chi_spec = t2_chi;
            t2.a_override = t2_a;
            t2.trunc_N = g.trunc;
            t2.prec_M = g.prec;
            t2.allow_large = g.allow_large;
            Theorem2Report rep = convergence_report(t2);
            save_cache();
            emit(g, render_report(rep, pick_format(g)),
                 std::string("theorem2 ") + (rep.outcome == Outcome::Pass ? "PASS" : "NOT-PASS"));
            return outcome_exit(rep.outcome);
        }

        if (sc_t1->parsed()) {
            t1.chi_spec = t1_chi;
            t1.a_override = t1_a;
            t1.trunc_N = g.trunc;
            t1.prec_M = g.prec;
            t1.allow_large = g.allow_large;
            t1.p = DirichletCharacter::parse(t1_chi).p();
            SiegelSeries<CyclotomicNumber> F;
            if (t1_f) {
                F = siegel_cyclotomic_from_json(load_json_file(*t1_f));
            } else {
                // default F: first normalized lift of the inverse-character run
                Theorem2Config fcfg = t1;
                fcfg.chi_spec = DirichletCharacter::parse(t1_chi).inverse().encode();
                fcfg.a_override.reset();
                F = build_G_km(resolve(fcfg), 1).G;
            }
            Theorem1Report rep = theorem1_product_run(F, t1);
            save_cache();
            emit(g, render_report(rep, pick_format(g)),
                 std::string("theorem1 ") + (rep.outcome == Outcome::Pass ? "PASS" : "NOT-PASS"));
            return outcome_exit(rep.outcome);
        }

        if (sc_lm->parsed()) {
            Lemma2Report rep = lemma2_check(lm_p, lm_a, lm_mmax);
            save_cache();
            emit(g, render_report(rep, pick_format(g)),
                 std::string("lemma2 ") + (rep.pass ? "PASS" : "FAIL"));
            return rep.pass ? kExitPass : kExitFail;
        }

        if (sc_uc->parsed()) {
            auto G = siegel_cyclotomic_from_json(load_json_file(uc_g));
            EmbeddingSigma sigma = EmbeddingSigma::parse(uc_sigma, g.prec);
            UnitCongResult res = unit_congruence_check(G, sigma, sigma.p());
            save_cache();
            emit(g, render_report(res, pick_format(g)),
                 std::string("unitcong ") +
                     (res.verdict == UnitCongResult::Verdict::Pass ? "PASS" : "NOT-PASS"));
            return res.verdict == UnitCongResult::Verdict::Pass ? kExitPass : kExitFail;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PrecisionLossError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
