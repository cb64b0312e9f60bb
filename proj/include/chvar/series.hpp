#pragma once

// Power series in a counting variable z truncated at a fixed order, with
// exact polynomial coefficients, and the plethystic calculus on them:
// Psi, PExp = exp(Psi(.)), its inverse PLog, and symmetric-power extraction.

#include <string>
#include <utility>
#include <vector>

#include "chvar/errors.hpp"
#include "chvar/partitions.hpp"
#include "chvar/polynomial.hpp"

namespace chvar {

class TruncSeries {
public:
    TruncSeries(int order, std::vector<std::string> coeff_vars)
        : order_(order), vars_(std::move(coeff_vars)),
          coeffs_(static_cast<size_t>(order) + 1, Polynomial(vars_)) {
        if (order < 0) throw std::domain_error("series order must be >= 0");
    }

    static TruncSeries one(int order, std::vector<std::string> coeff_vars) {
        TruncSeries s(order, std::move(coeff_vars));
        s.coeffs_[0] = Polynomial::one(s.vars_);
        return s;
    }

    int order() const { return order_; }
    const std::vector<std::string>& coeff_vars() const { return vars_; }

    const Polynomial& coeff(int k) const {
        check_index(k);
        return coeffs_[static_cast<size_t>(k)];
    }

    void set_coeff(int k, Polynomial p) {
        check_index(k);
        if (p.vars() != vars_)
            throw structural_error("series coefficient over the wrong variable list");
        coeffs_[static_cast<size_t>(k)] = std::move(p);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const TruncSeries&) const = default;

    TruncSeries& operator+=(const TruncSeries& rhs) {
        require_same_shape(rhs);
        for (int k = 0; k <= order_; ++k) coeffs_[k] += rhs.coeffs_[k];
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& rhs) {
        require_same_shape(rhs);
        for (int k = 0; k <= order_; ++k) coeffs_[k] -= rhs.coeffs_[k];
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { a += b; return a; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { a -= b; return a; }

    TruncSeries& operator*=(const Rational& c) {
        for (auto& p : coeffs_) p *= c;
        return *this;
    }

    friend TruncSeries operator*(TruncSeries a, const Rational& c) { a *= c; return a; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { a *= c; return a; }

    TruncSeries operator/(const Rational& c) const {
        TruncSeries out(*this);
        for (auto& p : out.coeffs_) p = p / c;
        return out;
    }

    // Cauchy product truncated at the shared order.
    friend TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_shape(b);
        TruncSeries out(a.order_, a.vars_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        return series_mul(a, b);
    }

    // f^{[l]}: every coefficient variable power and every z power raised to
    // its l-th power; terms pushed beyond the order are dropped.
    TruncSeries frobenius(unsigned long l) const {
        if (l == 0) throw std::domain_error("frobenius power must be >= 1");
        TruncSeries out(order_, vars_);
        for (int k = 0; static_cast<unsigned long>(k) * l <= static_cast<unsigned long>(order_); ++k)
            out.coeffs_[static_cast<size_t>(k * static_cast<long>(l))] = coeffs_[k].frobenius(l);
        return out;
    }

    // smallest k with a nonzero z^k coefficient, or order+1 if none
    int min_degree() const {
        for (int k = 0; k <= order_; ++k)
            if (!coeffs_[k].is_zero()) return k;
        return order_ + 1;
    }

private:
    int order_;
    std::vector<std::string> vars_;
    std::vector<Polynomial> coeffs_;

    void check_index(int k) const {
        if (k < 0 || k > order_)
            throw structural_error("series coefficient index out of range");
    }

    void require_same_shape(const TruncSeries& other) const {
        if (order_ != other.order_)
            throw structural_error("series have different truncation orders");
        if (vars_ != other.vars_)
            throw structural_error("series coefficients over different variable lists");
    }
};

// Psi(f) = sum_{l >= 1} f^{[l]} / l. Requires a zero constant term; the
// minimal z-degree of f is then >= 1, so f^{[l]} vanishes below order l and
// only l <= order contributes.
inline TruncSeries psi(const TruncSeries& f) {
    if (!f.coeff(0).is_zero())
        throw std::domain_error("psi requires a zero constant term");
    TruncSeries out(f.order(), f.coeff_vars());
    const int lo = f.min_degree();
    if (lo > f.order()) return out;
    for (int l = 1; l * lo <= f.order(); ++l)
        out += f.frobenius(static_cast<unsigned long>(l)) / Rational(l);
    return out;
}

// PExp(f) = exp(Psi(f)), via the truncated exponential: g = Psi(f) has zero
// constant term, so g^m contributes nothing below z^m.
inline TruncSeries pexp(const TruncSeries& f) {
    TruncSeries g = psi(f);
    TruncSeries acc = TruncSeries::one(f.order(), f.coeff_vars());
    TruncSeries power = acc;
    for (int m = 1; m <= f.order(); ++m) {
        power = series_mul(power, g) / Rational(m);
        acc += power;
    }
    return acc;
}

// PLog, the inverse of PExp: Psi^{-1}(log g) with
// Psi^{-1}(h) = sum_{l >= 1} moebius(l) h^{[l]} / l. Requires constant
// term 1. The Moebius inversion is covered by round-trip tests.
inline TruncSeries plog(const TruncSeries& g) {
    if (!g.coeff(0).is_one())
        throw std::domain_error("plog requires constant term 1");
    TruncSeries shifted = g - TruncSeries::one(g.order(), g.coeff_vars());
    // log(1 + s) = sum (-1)^{m+1} s^m / m
    TruncSeries log_g(g.order(), g.coeff_vars());
    TruncSeries power = TruncSeries::one(g.order(), g.coeff_vars());
    const int lo = shifted.min_degree();
    if (lo <= g.order()) {
        for (int m = 1; m * lo <= g.order(); ++m) {
            power = series_mul(power, shifted);
            Rational c(m % 2 == 1 ? 1 : -1, m);
            log_g += power * c;
        }
    }
    TruncSeries out(g.order(), g.coeff_vars());
    const int hlo = log_g.min_degree();
    if (hlo > g.order()) return out;
    for (int l = 1; l * hlo <= g.order(); ++l) {
        int mu = moebius(l);
        if (mu == 0) continue;
        out += log_g.frobenius(static_cast<unsigned long>(l)) * Rational(mu, l);
    }
    return out;
}

// Coefficient of z^m in PExp(e * z): the E-polynomial of the m-th symmetric
// power of a variety with E-polynomial e.
inline Polynomial sym_power_e(const Polynomial& e, int m) {
    if (m < 0) throw std::domain_error("sym_power_e requires m >= 0");
    if (m == 0) return Polynomial::one(e.vars());
    TruncSeries f(m, e.vars());
    f.set_coeff(1, e);
    return pexp(f).coeff(m);
}

} // namespace chvar
