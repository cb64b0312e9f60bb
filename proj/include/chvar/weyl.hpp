#pragma once

// Weyl groups of type A_{n-1} (S_n) and C_n (hyperoctahedral) as signed
// permutations acting on C^n, signed cycle decomposition, and the
// characteristic factor det(I + q A_g)^r computed two independent ways:
// from the cycle type and as a literal matrix determinant.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "chvar/errors.hpp"
#include "chvar/partitions.hpp"
#include "chvar/polynomial.hpp"

namespace chvar {

enum class WeylFamily { A, C };

// Brute-force enumeration caps: 8! = 40320 and 2^6 6! = 46080 elements.
inline constexpr int kWeylEnumCapA = 8;
inline constexpr int kWeylEnumCapC = 6;
inline constexpr int kDetOracleCap = 8;

struct SignedPerm {
    std::vector<int> image; // 0-based bijection of {0..n-1}
    std::vector<int> sign;  // entries +1 / -1, all +1 in type A

    int size() const { return static_cast<int>(image.size()); }
};

struct CycleType {
    Partition positive;
    Partition negative;

    int total() const { return positive.total() + negative.total(); }

    auto operator<=>(const CycleType&) const = default;
};

inline Integer weyl_order(WeylFamily family, int n) {
    Integer order = factorial(n);
    if (family == WeylFamily::C) order *= int_pow(2, n);
    return order;
}

// Every group element exactly once: n! permutations for type A, times all
// 2^n sign patterns for type C. Deterministic order.
inline std::vector<SignedPerm> enumerate_weyl(WeylFamily family, int n) {
    if (n < 1) throw std::domain_error("enumerate_weyl requires n >= 1");
    const int cap = family == WeylFamily::A ? kWeylEnumCapA : kWeylEnumCapC;
    if (n > cap)
        throw capacity_error("brute-force Weyl enumeration capped at n = " +
                             std::to_string(cap) +
                             "; use the class-indexed closed forms instead");
    std::vector<SignedPerm> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (family == WeylFamily::A) {
            out.push_back(SignedPerm{perm, std::vector<int>(n, 1)});
        } else {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> sign(n, 1);
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) sign[i] = -1;
                out.push_back(SignedPerm{perm, std::move(sign)});
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Signed cycle decomposition. A cycle is negative iff the product of its
// sign entries is -1; the tests pin this convention against det_oracle
// element by element.
inline CycleType cycle_type(const SignedPerm& g) {
    const int n = g.size();
    std::vector<bool> seen(n, false);
    std::map<int, int> pos, neg;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0, sign = 1, i = start;
        do {
            seen[i] = true;
            sign *= g.sign[i];
            ++len;
            i = g.image[i];
        } while (i != start);
        ++(sign == 1 ? pos : neg)[len];
    }
    return CycleType{Partition(pos), Partition(neg)};
}

// det(I + q A_g)^r from the cycle type: a positive j-cycle contributes
// 1 - (-q)^j, a negative j-cycle contributes 1 + (-q)^j.
inline Polynomial char_factor_from_cycles(const CycleType& ct, int r) {
    if (r < 1) throw std::domain_error("char_factor_from_cycles requires r >= 1");
    Polynomial out = Polynomial::one({"q"});
    auto cycle_poly = [](int len, bool negative) {
        // 1 -+ (-q)^len
        Rational c = (len % 2 == 0) ? 1 : -1;
        if (!negative) c = -c;
        return Polynomial::one({"q"}) +
               Polynomial::monomial({"q"}, {len}, c);
    };
    for (const auto& [len, mult] : ct.positive.parts())
        out *= cycle_poly(len, false).pow(static_cast<unsigned long>(mult) * r);
    for (const auto& [len, mult] : ct.negative.parts())
        out *= cycle_poly(len, true).pow(static_cast<unsigned long>(mult) * r);
    return out;
}

namespace detail {
inline Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, int row,
                          unsigned used_cols) {
    const int n = static_cast<int>(m.size());
    if (row == n) return Polynomial::one({"q"});
    Polynomial acc({"q"});
    int parity = 0;
    for (int col = 0; col < n; ++col) {
        if (used_cols & (1u << col)) continue;
        if (!m[row][col].is_zero()) {
            Polynomial sub = m[row][col] * det_rec(m, row + 1, used_cols | (1u << col));
            if (parity % 2 == 0)
                acc += sub;
            else
                acc -= sub;
        }
        ++parity;
    }
    return acc;
}
} // namespace detail

// det(I + q M_g)^r by literal cofactor expansion over the polynomial ring,
// where M_g is the signed permutation matrix of g.
inline Polynomial det_oracle(const SignedPerm& g, int r) {
    const int n = g.size();
    if (n > kDetOracleCap)
        throw capacity_error("det_oracle capped at n = " + std::to_string(kDetOracleCap));
    if (r < 1) throw std::domain_error("det_oracle requires r >= 1");
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial({"q"})));
    for (int i = 0; i < n; ++i) {
        m[i][i] += Polynomial::one({"q"});
        m[i][g.image[i]] += Polynomial::monomial({"q"}, {1}, g.sign[i]);
    }
    return detail::det_rec(m, 0, 0).pow(static_cast<unsigned long>(r));
}

} // namespace chvar
