#pragma once

// E-polynomials of free-group character varieties for GL_n, SL_n and PGL_n:
// the b_n recurrence, the Moebius/partition formula for the irreducible
// locus, totals and polystable strata through the plethystic exponential,
// and the SL_n = PGL_n values obtained by exact division by (x-1)^r.
//
// An engine instance caches b_n and the irreducible E-polynomials per rank.
// Instances are not thread-safe; use one engine per thread (results are
// identical regardless).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chvar/abelian.hpp"
#include "chvar/errors.hpp"
#include "chvar/partitions.hpp"
#include "chvar/polynomial.hpp"
#include "chvar/series.hpp"

namespace chvar {

enum class EKind { irreducible, total, stratum };

struct EPolyReport {
    GroupSpec group;
    int free_rank; // r, the rank of the free group
    int n;
    EKind kind;
    std::optional<Partition> stratum;
    Polynomial value; // over ("x")
};

class FreeGroupEngine {
public:
    explicit FreeGroupEngine(int r) : rank_(r) {
        if (r < 1) throw std::domain_error("free-group rank must be >= 1");
    }

    int rank() const { return rank_; }

    // c_n = ((x-1)(x^2-1)...(x^n-1))^{r-1}
    const Polynomial& c_poly(int n) {
        require_positive(n);
        while (static_cast<int>(c_.size()) < n) {
            int next = static_cast<int>(c_.size()) + 1;
            Polynomial prod = Polynomial::one({"x"});
            for (int j = 1; j <= next; ++j)
                prod *= Polynomial::monomial({"x"}, {j}, 1) - Polynomial::one({"x"});
            c_.push_back(prod.pow(static_cast<unsigned long>(rank_ - 1)));
        }
        return c_[static_cast<size_t>(n - 1)];
    }

    // b_n from the defining identity (1 + sum b_n t^n)(1 + sum c_n t^n) = 1,
    // i.e. b_n = -c_n - sum_{m=1}^{n-1} b_m c_{n-m}.
    const Polynomial& b_poly(int n) {
        require_positive(n);
        while (static_cast<int>(b_.size()) < n) {
            int next = static_cast<int>(b_.size()) + 1;
            Polynomial acc = -c_poly(next);
            for (int m = 1; m < next; ++m) acc -= b_[static_cast<size_t>(m - 1)] * c_poly(next - m);
            b_.push_back(std::move(acc));
        }
        return b_[static_cast<size_t>(n - 1)];
    }

    std::vector<Polynomial> b_polys(int n_max) {
        std::vector<Polynomial> out;
        for (int n = 1; n <= n_max; ++n) out.push_back(b_poly(n));
        return out;
    }

    // E of the irreducible locus of the GL_n character variety.
    // n = 1 is the torus base case (x-1)^r; n >= 2 is the Moebius/partition
    // formula, with r = 1 accepted and expected to collapse to 0.
    const Polynomial& e_irr(int n) {
        require_positive(n);
        auto it = irr_.find(n);
        if (it != irr_.end()) return it->second;
        Polynomial value({"x"});
        const Polynomial x = x_var();
        const Polynomial one = Polynomial::one({"x"});
        if (n == 1) {
            value = (x - one).pow(static_cast<unsigned long>(rank_));
        } else {
            Polynomial sum({"x"});
            for (int d : divisors(n)) {
                const int scale = n / d; // the Moebius argument n/d
                const int mu = moebius(scale);
                if (mu == 0) continue;
                Polynomial inner({"x"});
                for (const auto& part : partitions(d)) {
                    const int len = part.length();
                    std::vector<int> mults;
                    for (const auto& [size, mult] : part.parts()) mults.push_back(mult);
                    Rational weight = make_rational((len % 2 == 0 ? 1 : -1) *
                                                        multinomial(len, mults),
                                                    len);
                    Polynomial prod = one;
                    for (const auto& [j, kj] : part.parts()) {
                        prod *= b_poly(j)
                                    .frobenius(static_cast<unsigned long>(scale))
                                    .pow(static_cast<unsigned long>(kj));
                        long exponent = static_cast<long>(scale) * (rank_ - 1) * kj *
                                        (static_cast<long>(j) * (j - 1) / 2);
                        if (exponent < 0)
                            throw consistency_error("negative x-exponent in irreducible formula");
                        if (exponent > 0)
                            prod *= Polynomial::monomial({"x"}, {static_cast<int>(exponent)}, 1);
                    }
                    inner += weight * prod;
                }
                sum += make_rational(mu, scale) * inner;
            }
            value = (x - one) * sum;
        }
        if (!value.has_integer_coeffs())
            throw consistency_error("E(irr GL_" + std::to_string(n) + ", r=" +
                                    std::to_string(rank_) +
                                    ") has a non-integer coefficient: " + value.str());
        return irr_.emplace(n, std::move(value)).first->second;
    }

    // Generating series of the irreducible E-polynomials up to z^order.
    TruncSeries irr_series(int order) {
        TruncSeries f(order, {"x"});
        for (int m = 1; m <= order; ++m) f.set_coeff(m, e_irr(m));
        return f;
    }

    // E of the full GL_n character variety: coefficient of z^n in
    // PExp(irr_series).
    Polynomial e_total(int n) {
        require_positive(n);
        Polynomial value = pexp(irr_series(n)).coeff(n);
        if (!value.has_integer_coeffs())
            throw consistency_error("E(GL_" + std::to_string(n) + ", r=" +
                                    std::to_string(rank_) +
                                    ") has a non-integer coefficient: " + value.str());
        return value;
    }

    // E of the [k]-polystable stratum: a direct sum of k_j irreducibles of
    // dimension j contributes the k_j-th symmetric power of the irreducible
    // locus of GL_j, so the stratum is the product over j. The trivial
    // partition [n] recovers the irreducible locus itself.
    Polynomial e_stratum(const Partition& k) {
        if (k.total() < 1) throw std::domain_error("stratum partition must be non-empty");
        Polynomial value = Polynomial::one({"x"});
        for (const auto& [j, kj] : k.parts()) value *= sym_power_e(e_irr(j), kj);
        if (!value.has_integer_coeffs())
            throw consistency_error("stratum E-polynomial [" + k.str() +
                                    "] has a non-integer coefficient: " + value.str());
        return value;
    }

    // E of the SL_n (equivalently PGL_n) character variety.
    Polynomial e_sl_pgl(int n) { return divide_torus(e_total(n), "total"); }

    Polynomial e_sl_pgl_stratum(const Partition& k) {
        return divide_torus(e_stratum(k), "stratum [" + k.str() + "]");
    }

private:
    int rank_;
    std::vector<Polynomial> c_;
    std::vector<Polynomial> b_;
    std::map<int, Polynomial> irr_;

    static void require_positive(int n) {
        if (n < 1) throw std::domain_error("index must be >= 1");
    }

    Polynomial divide_torus(const Polynomial& gl_value, const std::string& what) {
        Polynomial torus =
            (x_var() - Polynomial::one({"x"})).pow(static_cast<unsigned long>(rank_));
        try {
            return gl_value.exact_div(torus);
        } catch (const divisibility_error& e) {
            throw consistency_error("GL " + what + " E-polynomial is not divisible by (x-1)^r: " +
                                    e.what());
        }
    }
};

inline EPolyReport e_irr_gl(int n, int r) {
    FreeGroupEngine eng(r);
    return EPolyReport{GroupSpec{Family::GL, n}, r, n, EKind::irreducible, {}, eng.e_irr(n)};
}

inline EPolyReport e_total_gl(int n, int r) {
    FreeGroupEngine eng(r);
    return EPolyReport{GroupSpec{Family::GL, n}, r, n, EKind::total, {}, eng.e_total(n)};
}

inline EPolyReport e_stratum_gl(int n, int r, const Partition& k) {
    if (k.total() != n)
        throw std::domain_error("stratum partition of " + std::to_string(k.total()) +
                                " does not match n = " + std::to_string(n));
    FreeGroupEngine eng(r);
    return EPolyReport{GroupSpec{Family::GL, n}, r, n, EKind::stratum, k, eng.e_stratum(k)};
}

// SL_n and PGL_n have equal E-polynomials; family selects the report label.
inline EPolyReport e_sl_pgl(int n, int r, std::optional<Partition> k = {},
                            Family family = Family::SL) {
    if (family != Family::SL && family != Family::PGL)
        throw std::domain_error("e_sl_pgl is defined for SL and PGL only");
    FreeGroupEngine eng(r);
    if (k) {
        if (k->total() != n)
            throw std::domain_error("stratum partition of " + std::to_string(k->total()) +
                                    " does not match n = " + std::to_string(n));
        return EPolyReport{GroupSpec{family, n}, r, n, EKind::stratum, k,
                           eng.e_sl_pgl_stratum(*k)};
    }
    return EPolyReport{GroupSpec{family, n}, r, n, EKind::total, {}, eng.e_sl_pgl(n)};
}

} // namespace chvar
