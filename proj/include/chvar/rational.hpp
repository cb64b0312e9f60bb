#pragma once

// Exact integer and rational arithmetic. GMP's mpq_class already keeps
// values in lowest terms with positive denominator, which is exactly the
// canonical form the polynomial layer relies on; the helpers here cover
// validated construction and the string forms used by the JSON schema.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chvar {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::domain_error("invalid rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::domain_error("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace chvar
