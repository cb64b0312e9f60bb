#pragma once

// LaTeX rendering of polynomials, monomial-sorted (ascending lexicographic
// exponent order, matching the canonical term order everywhere else).

#include <sstream>
#include <string>

#include "chvar/polynomial.hpp"

namespace chvar {

namespace detail {

inline std::string latex_coeff(const Rational& c) {
    if (is_integer(c)) return c.get_str();
    std::string sign = c < 0 ? "-" : "";
    Rational a = abs(c);
    return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

} // namespace detail

inline std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string mono;
        for (size_t i = 0; i < p.vars().size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += p.vars()[i];
            if (e[i] > 1) mono += "^{" + std::to_string(e[i]) + "}";
        }
        std::string body;
        if (mono.empty()) {
            body = detail::latex_coeff(c);
        } else if (c == 1) {
            body = mono;
        } else if (c == -1) {
            body = "-" + mono;
        } else {
            body = detail::latex_coeff(c) + " " + mono;
        }
        if (first) {
            os << body;
            first = false;
        } else if (body.front() == '-') {
            os << " - " << body.substr(1);
        } else {
            os << " + " << body;
        }
    }
    return os.str();
}

} // namespace chvar
