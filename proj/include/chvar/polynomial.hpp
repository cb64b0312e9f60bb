#pragma once

// Sparse multivariate polynomials with exact rational coefficients over an
// ordered list of named variables drawn from the fixed alphabet
// {t, u, v, x, q}. Terms live in a map ordered lexicographically by exponent
// vector and zero coefficients are never stored, so two equal values always
// have identical representations.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chvar/errors.hpp"
#include "chvar/rational.hpp"

namespace chvar {

inline const std::vector<std::string>& variable_alphabet() {
    static const std::vector<std::string> names{"t", "u", "v", "x", "q"};
    return names;
}

class Polynomial;

// Thrown by exact_div when no exact quotient exists; carries the witness.
struct divisibility_error;

class Polynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default; // zero over the empty variable list

    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {
        validate_vars(vars_);
    }

    static Polynomial constant(std::vector<std::string> vars, Rational c) {
        Polynomial p(std::move(vars));
        p.insert_term(Exponents(p.vars_.size(), 0), std::move(c));
        return p;
    }

    static Polynomial one(std::vector<std::string> vars) {
        return constant(std::move(vars), 1);
    }

    static Polynomial variable(std::vector<std::string> vars, const std::string& name) {
        Polynomial p(std::move(vars));
        auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
        if (it == p.vars_.end())
            throw structural_error("variable '" + name + "' not in variable list");
        Exponents e(p.vars_.size(), 0);
        e[static_cast<size_t>(it - p.vars_.begin())] = 1;
        p.insert_term(e, 1);
        return p;
    }

    static Polynomial monomial(std::vector<std::string> vars, Exponents exp, Rational c) {
        Polynomial p(std::move(vars));
        if (exp.size() != p.vars_.size())
            throw structural_error("exponent vector length does not match variable list");
        for (int e : exp)
            if (e < 0) throw structural_error("negative exponent");
        p.insert_term(std::move(exp), std::move(c));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->second == 1 &&
               is_constant_exp(terms_.begin()->first);
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

    // -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    long degree_in(const std::string& var) const {
        size_t i = var_index(var);
        long d = is_zero() ? -1 : 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[i]));
        return d;
    }

    bool has_integer_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    bool has_nonnegative_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator-() const {
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        require_same_vars(rhs);
        for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        require_same_vars(rhs);
        for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        Polynomial out(a.vars_);
        const size_t n = a.vars_.size();
        Exponents e(n);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
                out.insert_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [e, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Polynomial operator*(Polynomial a, const Rational& c) { a *= c; return a; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { a *= c; return a; }

    Polynomial operator/(const Rational& c) const {
        if (c == 0) throw std::domain_error("division of polynomial by zero scalar");
        Polynomial out(*this);
        for (auto& [e, v] : out.terms_) v /= c;
        return out;
    }

    Polynomial pow(unsigned long e) const {
        Polynomial acc = one(vars_);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return acc;
    }

    // Every variable v -> v^l simultaneously (exponent scaling).
    Polynomial frobenius(unsigned long l) const {
        if (l == 0) throw std::domain_error("frobenius power must be >= 1");
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_) {
            Exponents scaled(e);
            for (int& k : scaled) k = static_cast<int>(k * l);
            out.terms_.emplace(std::move(scaled), c);
        }
        return out;
    }

    // Simultaneous exact substitution. Every bound variable maps to a
    // polynomial over result_vars; unbound variables are carried through and
    // must appear in result_vars.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings,
                          std::vector<std::string> result_vars) const {
        validate_vars(result_vars);
        for (const auto& [name, value] : bindings) {
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                throw structural_error("binding for variable '" + name +
                                       "' absent from polynomial");
            if (value.vars_ != result_vars)
                throw structural_error("substitution value for '" + name +
                                       "' is over the wrong variable list");
        }
        std::vector<Polynomial> image;
        image.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = bindings.find(v);
            image.push_back(it != bindings.end() ? it->second
                                                 : Polynomial::variable(result_vars, v));
        }
        // cache of image[i]^k, filled on demand
        std::vector<std::map<int, Polynomial>> powers(vars_.size());
        Polynomial out(result_vars);
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(result_vars, c);
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto [it, fresh] = powers[i].try_emplace(e[i]);
                if (fresh) it->second = image[i].pow(static_cast<unsigned long>(e[i]));
                term *= it->second;
            }
            out += term;
        }
        return out;
    }

    // Substitute var = 1 and drop it from the variable list.
    Polynomial eval_at_one(const std::string& var) const {
        size_t i = var_index(var);
        std::vector<std::string> rest;
        for (size_t j = 0; j < vars_.size(); ++j)
            if (j != i) rest.push_back(vars_[j]);
        Polynomial out(rest);
        for (const auto& [e, c] : terms_) {
            Exponents reduced;
            reduced.reserve(e.size() - 1);
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) reduced.push_back(e[j]);
            out.insert_term(reduced, c);
        }
        return out;
    }

    Polynomial exact_div(const Polynomial& divisor) const;

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string body = term_to_string(e, c);
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

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    static void validate_vars(const std::vector<std::string>& vars) {
        const auto& alphabet = variable_alphabet();
        for (size_t i = 0; i < vars.size(); ++i) {
            if (std::find(alphabet.begin(), alphabet.end(), vars[i]) == alphabet.end())
                throw structural_error("variable '" + vars[i] +
                                       "' not in the alphabet {t,u,v,x,q}");
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw structural_error("duplicate variable '" + vars[i] + "'");
        }
    }

    static bool is_constant_exp(const Exponents& e) {
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }

    size_t var_index(const std::string& var) const {
        auto it = std::find(vars_.begin(), vars_.end(), var);
        if (it == vars_.end())
            throw structural_error("variable '" + var + "' not in variable list");
        return static_cast<size_t>(it - vars_.begin());
    }

    void require_same_vars(const Polynomial& other) const {
        if (vars_ != other.vars_)
            throw structural_error("operands are over different variable lists");
    }

    void insert_term(Exponents e, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::string term_to_string(const Exponents& e, const Rational& c) const {
        std::string mono;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_[i];
            if (e[i] > 1) mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty()) return rational_to_string(c);
        if (c == 1) return mono;
        if (c == -1) return "-" + mono;
        return rational_to_string(c) + "*" + mono;
    }
};

struct divisibility_error : std::runtime_error {
    Polynomial remainder;

    divisibility_error(const std::string& msg, Polynomial rem)
        : std::runtime_error(msg + " (remainder: " + rem.str() + ")"),
          remainder(std::move(rem)) {}
};

// Exact quotient this / divisor, or divisibility_error. Repeatedly cancels
// the lex-leading terms; if the quotient exists the leading term of the
// running difference is always divisible by the divisor's, so hitting a
// non-divisible leading term proves non-divisibility and the current
// difference is the reported witness.
inline Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    require_same_vars(divisor);
    if (divisor.is_zero()) throw std::domain_error("exact_div by zero polynomial");
    Polynomial rem(*this);
    Polynomial quot(vars_);
    const auto& [eb, cb] = *divisor.terms_.rbegin();
    const size_t n = vars_.size();
    while (!rem.is_zero()) {
        const auto& [ea, ca] = *rem.terms_.rbegin();
        Exponents diff(n);
        for (size_t i = 0; i < n; ++i) {
            diff[i] = ea[i] - eb[i];
            if (diff[i] < 0)
                throw divisibility_error("polynomial is not divisible", rem);
        }
        Polynomial m = Polynomial::monomial(vars_, std::move(diff), ca / cb);
        quot += m;
        rem -= m * divisor;
    }
    return quot;
}

inline Polynomial q_var() { return Polynomial::variable({"q"}, "q"); }
inline Polynomial x_var() { return Polynomial::variable({"x"}, "x"); }

} // namespace chvar
