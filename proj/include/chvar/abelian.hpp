#pragma once

// Mixed Hodge polynomials of the free-abelian character varieties of GL_n,
// SL_n and Sp_n. Everything is computed in the single Hodge-Tate variable q
// and presented in (t,u,v) through q -> t*u*v; the coefficients are mixed
// Hodge numbers, so results are checked to be integral, non-negative, with
// constant term 1 and the expected degree before they are returned.

#include <map>
#include <string>
#include <vector>

#include "chvar/errors.hpp"
#include "chvar/partitions.hpp"
#include "chvar/polynomial.hpp"
#include "chvar/weyl.hpp"

namespace chvar {

enum class Family { GL, SL, PGL, Sp };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "GL";
        case Family::SL: return "SL";
        case Family::PGL: return "PGL";
        case Family::Sp: return "Sp";
    }
    return "?";
}

struct GroupSpec {
    Family family;
    int n;

    auto operator<=>(const GroupSpec&) const = default;
};

struct MhpResult {
    GroupSpec group;
    int rank; // r, the rank of the free abelian group
    Polynomial in_q;   // over ("q")
    Polynomial in_tuv; // over ("t","u","v"), image of in_q under q -> t*u*v
};

namespace detail {

inline Polynomial q_to_tuv(const Polynomial& in_q) {
    const std::vector<std::string> tuv{"t", "u", "v"};
    Polynomial product = Polynomial::variable(tuv, "t") *
                         Polynomial::variable(tuv, "u") *
                         Polynomial::variable(tuv, "v");
    return in_q.substitute({{"q", product}}, tuv);
}

// Degree bound: r * dim(T_G). Top coefficients are W-invariant dimensions
// and can vanish; they do exactly when r is odd (e.g. mu for GL_2, r=1 is
// 1 + q), so equality is only required for even r.
inline MhpResult make_mhp_result(GroupSpec group, int r, Polynomial in_q,
                                 long max_degree) {
    const std::string label =
        family_name(group.family) + "_" + std::to_string(group.n) + ", r=" + std::to_string(r);
    if (!in_q.has_integer_coeffs())
        throw consistency_error("mixed Hodge polynomial of " + label +
                                " has a non-integer coefficient: " + in_q.str());
    if (!in_q.has_nonnegative_coeffs())
        throw consistency_error("mixed Hodge polynomial of " + label +
                                " has a negative coefficient: " + in_q.str());
    if (in_q.constant_term() != 1)
        throw consistency_error("mixed Hodge polynomial of " + label +
                                " has constant term != 1: " + in_q.str());
    const long degree = in_q.total_degree();
    if (degree > max_degree || (r % 2 == 0 && degree != max_degree))
        throw consistency_error("mixed Hodge polynomial of " + label +
                                " has unexpected degree: " + in_q.str());
    Polynomial in_tuv = q_to_tuv(in_q);
    for (const auto& [e, c] : in_tuv.terms()) {
        if (e[0] != e[1] || e[1] != e[2])
            throw consistency_error("presentation of " + label + " is not Hodge-Tate");
    }
    return MhpResult{group, r, std::move(in_q), std::move(in_tuv)};
}

inline MhpResult unit_mhp(GroupSpec group) {
    // r = 0: the character variety of the trivial group is a point.
    return make_mhp_result(group, 0, Polynomial::one({"q"}), 0);
}

} // namespace detail

// Brute-force determinant average over the full Weyl group: enumerate every
// element, tally conjugacy classes by signed cycle type, and average the
// characteristic factors. Independent of the closed-form partition sums.
inline MhpResult mhp_generic(WeylFamily family, int n, int r) {
    GroupSpec group{family == WeylFamily::A ? Family::GL : Family::Sp, n};
    if (r < 0) throw std::domain_error("mhp_generic requires r >= 0");
    if (r == 0) return detail::unit_mhp(group);
    std::map<CycleType, long> tally;
    for (const auto& g : enumerate_weyl(family, n)) ++tally[cycle_type(g)];
    Polynomial acc({"q"});
    long order = 0;
    for (const auto& [ct, count] : tally) {
        acc += Rational(count) * char_factor_from_cycles(ct, r);
        order += count;
    }
    acc = acc / Rational(order);
    return detail::make_mhp_result(group, r, acc, static_cast<long>(r) * n);
}

// Closed form for GL_n: sum over partitions of n of
// prod_j (1 - (-q)^j)^{k_j r} / (k_j! j^{k_j}).
inline MhpResult mhp_gl(int n, int r) {
    GroupSpec group{Family::GL, n};
    if (n < 1) throw std::domain_error("mhp_gl requires n >= 1");
    if (r < 0) throw std::domain_error("mhp_gl requires r >= 0");
    if (r == 0) return detail::unit_mhp(group);
    Polynomial acc({"q"});
    for (const auto& part : partitions(n)) {
        Integer centralizer = 1;
        for (const auto& [size, mult] : part.parts())
            centralizer *= factorial(mult) * int_pow(size, mult);
        Polynomial factor =
            char_factor_from_cycles(CycleType{part, Partition()}, r);
        acc += make_rational(1, centralizer) * factor;
    }
    return detail::make_mhp_result(group, r, acc, static_cast<long>(r) * n);
}

// SL_n via the factorization mu(GL_n) = mu(SL_n) * (1 + q)^r.
inline MhpResult mhp_sl(int n, int r) {
    GroupSpec group{Family::SL, n};
    if (n < 1) throw std::domain_error("mhp_sl requires n >= 1");
    if (r < 0) throw std::domain_error("mhp_sl requires r >= 0");
    if (r == 0) return detail::unit_mhp(group);
    Polynomial gl = mhp_gl(n, r).in_q;
    Polynomial torus = (Polynomial::one({"q"}) + q_var()).pow(static_cast<unsigned long>(r));
    Polynomial quotient;
    try {
        quotient = gl.exact_div(torus);
    } catch (const divisibility_error& e) {
        throw consistency_error(std::string("mu(GL_") + std::to_string(n) +
                                ") is not divisible by (1+q)^r: " + e.what());
    }
    return detail::make_mhp_result(group, r, quotient, static_cast<long>(r) * (n - 1));
}

// Closed form for Sp_n (rank n, Weyl group of order 2^n n!): class-size
// weighted bipartition sum.
inline MhpResult mhp_sp(int n, int r) {
    GroupSpec group{Family::Sp, n};
    if (n < 1) throw std::domain_error("mhp_sp requires n >= 1");
    if (r < 0) throw std::domain_error("mhp_sp requires r >= 0");
    if (r == 0) return detail::unit_mhp(group);
    Polynomial acc({"q"});
    for (const auto& bp : bipartitions(n)) {
        Polynomial factor = char_factor_from_cycles(CycleType{bp.a, bp.b}, r);
        acc += Rational(hyperoct_class_size(bp)) * factor;
    }
    acc = acc / Rational(int_pow(2, n) * factorial(n));
    return detail::make_mhp_result(group, r, acc, static_cast<long>(r) * n);
}

enum class Specialization { poincare, e_poly, euler };

// poincare: u = v = 1, a polynomial in t;
// e_poly:  t = -1, a polynomial in x = uv (q -> -x);
// euler:   t = -1, u = v = 1, a constant.
inline Polynomial specialize(const MhpResult& m, Specialization target) {
    switch (target) {
        case Specialization::poincare:
            return m.in_q.substitute({{"q", Polynomial::variable({"t"}, "t")}}, {"t"});
        case Specialization::e_poly:
            return m.in_q.substitute(
                {{"q", Polynomial::monomial({"x"}, {1}, -1)}}, {"x"});
        case Specialization::euler:
            return m.in_q.substitute({{"q", Polynomial::constant({}, -1)}}, {});
    }
    throw std::domain_error("unknown specialization");
}

} // namespace chvar
