#pragma once

// Bit-exact JSON interchange for polynomials and truncated series.
//
// Polynomial: {"variables": ["t","u","v"],
//              "terms": [{"exp": [1,1,1], "coef": "1"}, ...]}
// with coefficients as decimal strings ("p/q" for non-integers) and terms
// in ascending lexicographic exponent order.
//
// Series: {"order": N, "coeffs": [<polynomial>, ...]} with N+1 entries.

#include <string>
#include <vector>

#include "json.hpp"

#include "chvar/polynomial.hpp"
#include "chvar/series.hpp"

namespace chvar {

using Json = nlohmann::ordered_json;

inline Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exp"] = e;
        term["coef"] = rational_to_string(c);
        terms.push_back(std::move(term));
    }
    Json out;
    out["variables"] = p.vars();
    out["terms"] = std::move(terms);
    return out;
}

inline Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("terms"))
        throw structural_error("polynomial JSON must have 'variables' and 'terms'");
    std::vector<std::string> vars;
    for (const auto& v : j.at("variables")) {
        if (!v.is_string()) throw structural_error("variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    Polynomial out(vars);
    for (const auto& term : j.at("terms")) {
        if (!term.contains("exp") || !term.contains("coef"))
            throw structural_error("polynomial term must have 'exp' and 'coef'");
        std::vector<int> exp;
        for (const auto& e : term.at("exp")) {
            if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() > 1000000)
                throw structural_error("exponents must be non-negative integers (<= 10^6)");
            exp.push_back(e.get<int>());
        }
        Rational c = parse_rational(term.at("coef").get<std::string>());
        out += Polynomial::monomial(vars, std::move(exp), std::move(c));
    }
    return out;
}

inline Json series_to_json(const TruncSeries& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(polynomial_to_json(s.coeff(k)));
    Json out;
    out["order"] = s.order();
    out["coeffs"] = std::move(coeffs);
    return out;
}

inline TruncSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw structural_error("series JSON must have 'order' and 'coeffs'");
    int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw structural_error("series JSON must carry exactly order+1 coefficients");
    Polynomial first = polynomial_from_json(coeffs.at(0));
    TruncSeries out(order, first.vars());
    out.set_coeff(0, std::move(first));
    for (int k = 1; k <= order; ++k) out.set_coeff(k, polynomial_from_json(coeffs.at(k)));
    return out;
}

} // namespace chvar
