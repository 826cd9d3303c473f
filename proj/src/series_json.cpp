#include "psl/series_json.hpp"

#include <stdexcept>

namespace psl {

using nlohmann::json;

json meta_to_json(const FormMeta& meta) {
    json j;
    j["weight"] = meta.weight;
    j["character"] = meta.character ? meta.character->encode() : "trivial";
    j["level"] = meta.level;
    switch (meta.kind) {
        case SeriesKind::Elliptic: j["kind"] = "elliptic"; break;
        case SeriesKind::JacobiIndex1: j["kind"] = "jacobi1"; break;
        case SeriesKind::SiegelDeg2: j["kind"] = "siegel2"; break;
    }
    return j;
}

FormMeta meta_from_json(const json& j) {
    FormMeta m;
    m.weight = j.at("weight").get<long>();
    std::string chi = j.at("character").get<std::string>();
    if (chi != "trivial") m.character = DirichletCharacter::parse(chi);
    m.level = j.at("level").get<long>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "elliptic") m.kind = SeriesKind::Elliptic;
    else if (kind == "jacobi1") m.kind = SeriesKind::JacobiIndex1;
    else if (kind == "siegel2") m.kind = SeriesKind::SiegelDeg2;
    else throw std::invalid_argument("meta_from_json: unknown kind " + kind);
    return m;
}

json value_to_json(const Rational& v) { return v.encode(); }
json value_to_json(const CyclotomicNumber& v) { return v.encode(); }

json value_to_json(const PadicApprox& v) {
    json j;
    switch (v.state()) {
        case PadicApprox::State::ExactZero:
            j["v"] = "inf";
            break;
        case PadicApprox::State::ZeroToPrecision:
            j["v"] = ">=" + std::to_string(v.valuation());
            break;
        case PadicApprox::State::Nonzero:
            j["v"] = v.valuation();
            j["unit"] = v.unit().get_str();
            j["relprec"] = v.relprec();
            break;
    }
    return j;
}

Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

CyclotomicNumber cyclotomic_from_json(const json& j, long conductor) {
    return CyclotomicNumber::parse(conductor, j.get<std::string>());
}

PadicApprox padic_from_json(const json& j, long p) {
    const auto& v = j.at("v");
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf") return PadicApprox::exact_zero(p);
        if (s.rfind(">=", 0) == 0) return PadicApprox::zero_to_precision(p, std::stol(s.substr(2)));
        throw std::invalid_argument("padic_from_json: bad valuation " + s);
    }
    return PadicApprox::from_parts(p, v.get<long>(), mpz_class(j.at("unit").get<std::string>()),
                                   j.at("relprec").get<int>());
}

long json_conductor(const json& j) { return j.at("meta").at("conductor").get<long>(); }

namespace {

long json_p(const json& j) { return j.at("meta").at("p").get<long>(); }

template <typename R, typename Reader>
EllipticSeries<R> elliptic_from(const json& j, Reader read) {
    EllipticSeries<R> s(j.at("trunc").get<long>(), meta_from_json(j.at("meta")));
    for (const auto& row : j.at("coeffs")) {
        long n = row.at(0).get<long>();
        if (n < 0 || n > s.trunc) throw std::invalid_argument("series json: index beyond truncation");
        s.a[n] = read(row.at(1));
    }
    return s;
}

template <typename R, typename Reader>
JacobiSeries<R> jacobi_from(const json& j, Reader read) {
    JacobiSeries<R> s;
    s.trunc = j.at("trunc").get<long>();
    s.meta = meta_from_json(j.at("meta"));
    for (const auto& row : j.at("coeffs"))
        s.c[{row.at(0).get<long>(), row.at(1).get<long>()}] = read(row.at(2));
    return s;
}

template <typename R, typename Reader>
SiegelSeries<R> siegel_from(const json& j, Reader read) {
    SiegelSeries<R> s;
    s.trunc = j.at("trunc").get<long>();
    s.meta = meta_from_json(j.at("meta"));
    for (const auto& row : j.at("coeffs"))
        s.a[{row.at(0).get<long>(), row.at(1).get<long>(), row.at(2).get<long>()}] = read(row.at(3));
    return s;
}

} // namespace

json series_to_json(const EllipticSeries<Rational>& s) { return series_to_json(s, "rational", json::object()); }
json series_to_json(const JacobiSeries<Rational>& s) { return series_to_json(s, "rational", json::object()); }
json series_to_json(const SiegelSeries<Rational>& s) { return series_to_json(s, "rational", json::object()); }

json series_to_json(const EllipticSeries<CyclotomicNumber>& s) {
    long m = s.a.empty() ? 1 : s.a[0].conductor();
    return series_to_json(s, "cyclotomic", json{{"conductor", m}});
}
json series_to_json(const JacobiSeries<CyclotomicNumber>& s) {
    long m = s.c.empty() ? 1 : s.c.begin()->second.conductor();
    return series_to_json(s, "cyclotomic", json{{"conductor", m}});
}
json series_to_json(const SiegelSeries<CyclotomicNumber>& s) {
    long m = s.a.empty() ? 1 : s.a.begin()->second.conductor();
    return series_to_json(s, "cyclotomic", json{{"conductor", m}});
}

json series_to_json(const EllipticSeries<PadicApprox>& s, long p) {
    return series_to_json(s, "padic", json{{"p", p}});
}
json series_to_json(const JacobiSeries<PadicApprox>& s, long p) {
    return series_to_json(s, "padic", json{{"p", p}});
}
json series_to_json(const SiegelSeries<PadicApprox>& s, long p) {
    return series_to_json(s, "padic", json{{"p", p}});
}

EllipticSeries<Rational> elliptic_rational_from_json(const json& j) {
    return elliptic_from<Rational>(j, rational_from_json);
}
JacobiSeries<Rational> jacobi_rational_from_json(const json& j) {
    return jacobi_from<Rational>(j, rational_from_json);
}
SiegelSeries<Rational> siegel_rational_from_json(const json& j) {
    return siegel_from<Rational>(j, rational_from_json);
}

EllipticSeries<CyclotomicNumber> elliptic_cyclotomic_from_json(const json& j) {
    long m = json_conductor(j);
    return elliptic_from<CyclotomicNumber>(j, [m](const json& v) { return cyclotomic_from_json(v, m); });
}
JacobiSeries<CyclotomicNumber> jacobi_cyclotomic_from_json(const json& j) {
    long m = json_conductor(j);
    return jacobi_from<CyclotomicNumber>(j, [m](const json& v) { return cyclotomic_from_json(v, m); });
}
SiegelSeries<CyclotomicNumber> siegel_cyclotomic_from_json(const json& j) {
    long m = json_conductor(j);
    return siegel_from<CyclotomicNumber>(j, [m](const json& v) { return cyclotomic_from_json(v, m); });
}

EllipticSeries<PadicApprox> elliptic_padic_from_json(const json& j) {
    long p = json_p(j);
    return elliptic_from<PadicApprox>(j, [p](const json& v) { return padic_from_json(v, p); });
}
SiegelSeries<PadicApprox> siegel_padic_from_json(const json& j) {
    long p = json_p(j);
    return siegel_from<PadicApprox>(j, [p](const json& v) { return padic_from_json(v, p); });
}

} // namespace psl
