#include "psl/report.hpp"

#include <json.hpp>

#include <sstream>

namespace psl {

using nlohmann::json;

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw std::invalid_argument("unknown format " + name + " (expected json, csv or text)");
}

namespace {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "PASS";
        case Outcome::Fail: return "FAIL";
        case Outcome::PrecisionInsufficient: return "PRECISION-INSUFFICIENT";
    }
    return "?";
}

std::string delta_str(const DeltaEntry& e, int M) {
    return e.capped ? ">=" + std::to_string(M) : std::to_string(e.v);
}

json config_json(const Theorem2Config& cfg) {
    return json{{"p", cfg.p},         {"chi", cfg.chi_spec}, {"sigma", cfg.sigma_index},
                {"mmax", cfg.m_max},  {"trunc", cfg.trunc_N}, {"prec", cfg.prec_M}};
}

json dist_json(const SeriesDistance& d) {
    json j;
    switch (d.kind) {
        case SeriesDistance::Kind::Infinite:
            j["min_val"] = "inf";
            break;
        case SeriesDistance::Kind::AtLeast:
            j["min_val"] = ">=" + std::to_string(d.value);
            break;
        case SeriesDistance::Kind::Finite:
            j["min_val"] = d.value;
            j["argmin"] = {d.argmin.n, d.argmin.r, d.argmin.l};
            break;
    }
    return j;
}

} // namespace

std::string render_report(const Theorem2Report& rep, ReportFormat fmt) {
    int M = rep.effective_M;
    if (fmt == ReportFormat::Json) {
        json stages = json::array();
        for (const auto& st : rep.stages) {
            json table = json::array();
            for (const auto& e : st.table)
                table.push_back({e.key.n, e.key.r, e.key.l,
                                 e.capped ? json(">=" + std::to_string(M)) : json(e.v)});
            json sj = dist_json(st.min_dist);
            sj["m"] = st.m;
            sj["k_m"] = st.k_m;
            sj["k_m_mod_pM"] = st.km_mod_pM;
            sj["k_m_class"] = st.km_class;
            sj["row0_check"] = st.row0_ok;
            sj["table"] = table;
            stages.push_back(sj);
        }
        json esteps = json::array();
        for (const auto& s : rep.eisenstein_steps) {
            json per_n = json::array();
            for (const auto& [n, v] : s.per_n) per_n.push_back({n, v});
            esteps.push_back({{"m_from", s.m_from},
                              {"m_to", s.m_to},
                              {"min_val", s.defined ? json(s.min_v) : json("inf")},
                              {"per_n", per_n}});
        }
        json j{{"config", config_json(rep.config)},
               {"alpha", rep.alpha},
               {"a", rep.a},
               {"limit_weight", {{"s", 0}, {"class", rep.limit_class}}},
               {"effective_prec", rep.effective_M},
               {"retried", rep.retried},
               {"stages", stages},
               {"eisenstein_factor", esteps},
               {"pass", rep.outcome == Outcome::Pass},
               {"outcome", outcome_name(rep.outcome)},
               {"note", rep.note}};
        return j.dump(1) + "\n";
    }
    if (fmt == ReportFormat::Csv) {
        std::ostringstream os;
        os << "m,n,r,l,valuation\n";
        for (const auto& st : rep.stages)
            for (const auto& e : st.table)
                os << st.m << "," << e.key.n << "," << e.key.r << "," << e.key.l << ","
                   << delta_str(e, M) << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "convergence run: p=" << rep.config.p << " chi=" << rep.config.chi_spec << " sigma_"
       << rep.config.sigma_index << " a=" << rep.a << " alpha=" << rep.alpha
       << " N=" << rep.config.trunc_N << " M=" << rep.effective_M
       << (rep.retried ? " (retried at higher precision)" : "") << "\n";
    os << "limit weight in Z_p x Z/(p-1): (0, " << rep.limit_class << ")\n";
    for (const auto& st : rep.stages) {
        os << "  m=" << st.m << "  k_m=" << st.k_m << "  k_m mod p^M=" << st.km_mod_pM
           << "  class=" << st.km_class << "\n";
        os << "    min_T v_p(G^sigma - 1) = ";
        switch (st.min_dist.kind) {
            case SeriesDistance::Kind::Infinite: os << "inf"; break;
            case SeriesDistance::Kind::AtLeast: os << ">=" << st.min_dist.value; break;
            case SeriesDistance::Kind::Finite:
                os << st.min_dist.value << " at (n,r,l)=(" << st.min_dist.argmin.n << ","
                   << st.min_dist.argmin.r << "," << st.min_dist.argmin.l << ")";
                break;
        }
        os << "   l=0 row check: " << (st.row0_ok ? "ok" : "MISMATCH") << "\n";
        os << "    delta table:";
        for (const auto& e : st.table)
            os << " (" << e.key.n << "," << e.key.r << "," << e.key.l << ")=" << delta_str(e, M);
        os << "\n";
    }
    if (!rep.eisenstein_steps.empty()) {
        os << "  level-1 factor convergence (n <= 10):\n";
        for (const auto& s : rep.eisenstein_steps) {
            os << "    m=" << s.m_from << " -> " << s.m_to << ": min v_p(diff) = ";
            if (s.defined) os << s.min_v; else os << "inf";
            os << "\n";
        }
    }
    os << outcome_name(rep.outcome) << ": " << rep.note << "\n";
    return os.str();
}

std::string render_report(const Theorem1Report& rep, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        json stages = json::array();
        for (const auto& st : rep.stages) {
            json table = json::array();
            for (const auto& e : st.table)
                table.push_back({e.key.n, e.key.r, e.key.l, e.v});
            json sj = dist_json(st.dist);
            sj["m"] = st.m;
            sj["k_m"] = st.k_m;
            sj["product_weight"] = st.product_weight;
            sj["character_trivial"] = st.character_trivial;
            sj["weight_even"] = st.weight_even;
            sj["table"] = table;
            stages.push_back(sj);
        }
        json j{{"config", config_json(rep.config)},
               {"alpha", rep.alpha},
               {"a", rep.a},
               {"f", {{"character", rep.f_character}, {"weight", rep.f_weight}}},
               {"stages", stages},
               {"pass", rep.outcome == Outcome::Pass},
               {"outcome", outcome_name(rep.outcome)},
               {"note", rep.note}};
        return j.dump(1) + "\n";
    }
    if (fmt == ReportFormat::Csv) {
        std::ostringstream os;
        os << "m,n,r,l,valuation\n";
        for (const auto& st : rep.stages)
            for (const auto& e : st.table)
                os << st.m << "," << e.key.n << "," << e.key.r << "," << e.key.l << ","
                   << (e.capped ? ">=" + std::to_string(rep.config.prec_M) : std::to_string(e.v))
                   << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "product run: F (weight " << rep.f_weight << ", chi=" << rep.f_character
       << ") against the chi^-1 sequence " << rep.config.chi_spec << ", sigma_"
       << rep.config.sigma_index << ", a=" << rep.a << "\n";
    for (const auto& st : rep.stages) {
        os << "  m=" << st.m << "  k_m=" << st.k_m << "  weight(FG)=" << st.product_weight
           << (st.weight_even ? " (even)" : " (ODD!)")
           << (st.character_trivial ? ", trivial character" : ", NONTRIVIAL character") << "\n";
        os << "    min_T v_p((FG)^sigma - F^sigma) = ";
        switch (st.dist.kind) {
            case SeriesDistance::Kind::Infinite: os << "inf"; break;
            case SeriesDistance::Kind::AtLeast: os << ">=" << st.dist.value; break;
            case SeriesDistance::Kind::Finite:
                os << st.dist.value << " at (" << st.dist.argmin.n << "," << st.dist.argmin.r << ","
                   << st.dist.argmin.l << ")";
                break;
        }
        os << "\n";
    }
    os << outcome_name(rep.outcome) << ": " << rep.note << "\n";
    return os.str();
}

std::string render_report(const Lemma2Report& rep, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"m", r.m},
                            {"l_m", r.l},
                            {"vp_l", r.vp_l},
                            {"p1_divides", r.p1_divides},
                            {"vp_B_over_2l", r.vp_const},
                            {"ok", r.ok}});
        json j{{"config", {{"p", rep.p}, {"a", rep.a}, {"mmax", rep.m_max}}},
               {"rows", rows},
               {"pass", rep.pass}};
        return j.dump(1) + "\n";
    }
    if (fmt == ReportFormat::Csv) {
        std::ostringstream os;
        os << "m,l_m,vp_l,p1_divides,vp_B_over_2l,ok\n";
        for (const auto& r : rep.rows)
            os << r.m << "," << r.l << "," << r.vp_l << "," << (r.p1_divides ? 1 : 0) << ","
               << r.vp_const << "," << (r.ok ? 1 : 0) << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "constant-term valuations for p=" << rep.p << ", a=" << rep.a << ":\n";
    for (const auto& r : rep.rows)
        os << "  m=" << r.m << "  l_m=" << r.l << "  v_p(l_m)=" << r.vp_l << "  (p-1)|l_m: "
           << (r.p1_divides ? "yes" : "no") << "  v_p(B/2l)=" << r.vp_const << "  "
           << (r.ok ? "ok" : "FAIL") << "\n";
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_report(const UnitCongResult& res, ReportFormat fmt) {
    const char* verdict = res.verdict == UnitCongResult::Verdict::Pass ? "PASS"
                          : res.verdict == UnitCongResult::Verdict::Fail ? "FAIL"
                                                                         : "NON-INTEGRAL";
    if (fmt == ReportFormat::Json) {
        json j{{"verdict", verdict}};
        if (res.witness)
            j["witness"] = {{"index", {res.witness->n, res.witness->r, res.witness->l}},
                            {"valuation", res.witness_val}};
        return j.dump(1) + "\n";
    }
    std::ostringstream os;
    os << "unit congruence: " << verdict;
    if (res.witness)
        os << " at (n,r,l)=(" << res.witness->n << "," << res.witness->r << "," << res.witness->l
           << "), valuation " << res.witness_val;
    os << "\n";
    return os.str();
}

Theorem2Report theorem2_report_from_json(const std::string& text) {
    json j = json::parse(text);
    Theorem2Report rep;
    const auto& c = j.at("config");
    rep.config.p = c.at("p").get<long>();
    rep.config.chi_spec = c.at("chi").get<std::string>();
    rep.config.sigma_index = c.at("sigma").get<int>();
    rep.config.m_max = c.at("mmax").get<int>();
    rep.config.trunc_N = c.at("trunc").get<long>();
    rep.config.prec_M = c.at("prec").get<int>();
    rep.alpha = j.at("alpha").get<long>();
    rep.a = j.at("a").get<long>();
    rep.limit_class = j.at("limit_weight").at("class").get<long>();
    rep.effective_M = j.at("effective_prec").get<int>();
    rep.retried = j.at("retried").get<bool>();
    rep.note = j.at("note").get<std::string>();
    std::string outcome = j.at("outcome").get<std::string>();
    rep.outcome = outcome == "PASS" ? Outcome::Pass
                  : outcome == "FAIL" ? Outcome::Fail
                                      : Outcome::PrecisionInsufficient;
    for (const auto& sj : j.at("stages")) {
        StageResult st;
        st.m = sj.at("m").get<int>();
        st.k_m = sj.at("k_m").get<long>();
        st.km_mod_pM = sj.at("k_m_mod_pM").get<std::string>();
        st.km_class = sj.at("k_m_class").get<long>();
        st.row0_ok = sj.at("row0_check").get<bool>();
        const auto& mv = sj.at("min_val");
        if (mv.is_string()) {
            std::string s = mv.get<std::string>();
            if (s == "inf") {
                st.min_dist.kind = SeriesDistance::Kind::Infinite;
            } else {
                st.min_dist.kind = SeriesDistance::Kind::AtLeast;
                st.min_dist.value = std::stol(s.substr(2));
            }
        } else {
            st.min_dist.kind = SeriesDistance::Kind::Finite;
            st.min_dist.value = mv.get<long>();
            const auto& am = sj.at("argmin");
            st.min_dist.argmin = {am.at(0).get<long>(), am.at(1).get<long>(), am.at(2).get<long>()};
        }
        for (const auto& row : sj.at("table")) {
            DeltaEntry e;
            e.key = {row.at(0).get<long>(), row.at(1).get<long>(), row.at(2).get<long>()};
            if (row.at(3).is_string()) {
                e.capped = true;
                e.v = rep.effective_M;
            } else {
                e.v = row.at(3).get<long>();
            }
            st.table.push_back(e);
        }
        rep.stages.push_back(st);
    }
    for (const auto& ej : j.at("eisenstein_factor")) {
        ESeriesStep s;
        s.m_from = ej.at("m_from").get<int>();
        s.m_to = ej.at("m_to").get<int>();
        if (ej.at("min_val").is_string()) s.defined = false;
        else s.min_v = ej.at("min_val").get<long>();
        for (const auto& pn : ej.at("per_n"))
            s.per_n.push_back({pn.at(0).get<long>(), pn.at(1).get<long>()});
        rep.eisenstein_steps.push_back(s);
    }
    return rep;
}

} // namespace psl
