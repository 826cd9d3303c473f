#pragma once

#include <json.hpp>

#include "psl/qseries.hpp"

namespace psl {

/* JSON wire format:
 *   {"meta": {"weight", "character", "level", "kind", "ring", ...},
 *    "trunc": N,
 *    "coeffs": [[n, value], [n, r, value], or [n, r, l, value], ...]}
 * Rational and cyclotomic values are canonical strings ("num/den",
 * "[c0, c1, ...]"); p-adic values are {"v": int|"inf", "unit": "...",
 * "relprec": int} (or {"v": ">=A"} for zero-to-precision). Coefficients are
 * emitted in lexicographic index order. */

nlohmann::json meta_to_json(const FormMeta& meta);
FormMeta meta_from_json(const nlohmann::json& j);

nlohmann::json value_to_json(const Rational& v);
nlohmann::json value_to_json(const CyclotomicNumber& v);
nlohmann::json value_to_json(const PadicApprox& v);

Rational rational_from_json(const nlohmann::json& j);
CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j, long conductor);
PadicApprox padic_from_json(const nlohmann::json& j, long p);

template <CoefficientRing R>
nlohmann::json series_to_json(const EllipticSeries<R>& s, const char* ring,
                              const nlohmann::json& ring_extra) {
    nlohmann::json j;
    j["meta"] = meta_to_json(s.meta);
    j["meta"]["ring"] = ring;
    for (auto it = ring_extra.begin(); it != ring_extra.end(); ++it) j["meta"][it.key()] = *it;
    j["trunc"] = s.trunc;
    auto coeffs = nlohmann::json::array();
    for (long n = 0; n <= s.trunc; ++n) coeffs.push_back({n, value_to_json(s.a[n])});
    j["coeffs"] = coeffs;
    return j;
}

template <CoefficientRing R>
nlohmann::json series_to_json(const JacobiSeries<R>& s, const char* ring,
                              const nlohmann::json& ring_extra) {
    nlohmann::json j;
    j["meta"] = meta_to_json(s.meta);
    j["meta"]["ring"] = ring;
    for (auto it = ring_extra.begin(); it != ring_extra.end(); ++it) j["meta"][it.key()] = *it;
    j["trunc"] = s.trunc;
    auto coeffs = nlohmann::json::array();
    for (const auto& [k, v] : s.c) coeffs.push_back({k.n, k.r, value_to_json(v)});
    j["coeffs"] = coeffs;
    return j;
}

template <CoefficientRing R>
nlohmann::json series_to_json(const SiegelSeries<R>& s, const char* ring,
                              const nlohmann::json& ring_extra) {
    nlohmann::json j;
    j["meta"] = meta_to_json(s.meta);
    j["meta"]["ring"] = ring;
    for (auto it = ring_extra.begin(); it != ring_extra.end(); ++it) j["meta"][it.key()] = *it;
    j["trunc"] = s.trunc;
    auto coeffs = nlohmann::json::array();
    for (const auto& [k, v] : s.a) coeffs.push_back({k.n, k.r, k.l, value_to_json(v)});
    j["coeffs"] = coeffs;
    return j;
}

nlohmann::json series_to_json(const EllipticSeries<Rational>& s);
nlohmann::json series_to_json(const JacobiSeries<Rational>& s);
nlohmann::json series_to_json(const SiegelSeries<Rational>& s);
nlohmann::json series_to_json(const EllipticSeries<CyclotomicNumber>& s);
nlohmann::json series_to_json(const JacobiSeries<CyclotomicNumber>& s);
nlohmann::json series_to_json(const SiegelSeries<CyclotomicNumber>& s);
nlohmann::json series_to_json(const EllipticSeries<PadicApprox>& s, long p);
nlohmann::json series_to_json(const JacobiSeries<PadicApprox>& s, long p);
nlohmann::json series_to_json(const SiegelSeries<PadicApprox>& s, long p);

EllipticSeries<Rational> elliptic_rational_from_json(const nlohmann::json& j);
JacobiSeries<Rational> jacobi_rational_from_json(const nlohmann::json& j);
SiegelSeries<Rational> siegel_rational_from_json(const nlohmann::json& j);
EllipticSeries<CyclotomicNumber> elliptic_cyclotomic_from_json(const nlohmann::json& j);
JacobiSeries<CyclotomicNumber> jacobi_cyclotomic_from_json(const nlohmann::json& j);
SiegelSeries<CyclotomicNumber> siegel_cyclotomic_from_json(const nlohmann::json& j);
EllipticSeries<PadicApprox> elliptic_padic_from_json(const nlohmann::json& j);
SiegelSeries<PadicApprox> siegel_padic_from_json(const nlohmann::json& j);

// Conductor recorded in the meta of a cyclotomic-ring series.
long json_conductor(const nlohmann::json& j);

} // namespace psl
