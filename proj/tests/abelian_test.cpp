#include "doctest.h"

#include "chvar/abelian.hpp"

#include "test_util.hpp"

using namespace chvar;

namespace {
Polynomial one_q() { return Polynomial::one({"q"}); }

Polynomial sp1_value(int r) {
    return ((one_q() + q_var()).pow(r) + (one_q() - q_var()).pow(r)) / Rational(2);
}
} // namespace

TEST_CASE("brute-force Weyl averages on tiny groups") {
    for (int r = 1; r <= 4; ++r) {
        CHECK(mhp_generic(WeylFamily::A, 1, r).in_q == (one_q() + q_var()).pow(r));
        CHECK(mhp_generic(WeylFamily::C, 1, r).in_q == sp1_value(r));
    }
    CHECK(mhp_generic(WeylFamily::A, 2, 1).in_q == test::poly_q({{0, 1}, {1, 1}}));
}

TEST_CASE("GL closed form") {
    for (int r = 1; r <= 4; ++r) CHECK(mhp_gl(1, r).in_q == (one_q() + q_var()).pow(r));
    CHECK(mhp_gl(2, 2).in_q == (one_q() + q_var()).pow(2) * (one_q() + q_var().pow(2)));

    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            CHECK(mhp_gl(n, r).in_q == mhp_generic(WeylFamily::A, n, r).in_q);
}

TEST_CASE("SL via exact division") {
    for (int r = 1; r <= 4; ++r) CHECK(mhp_sl(1, r).in_q == one_q());
    CHECK(mhp_sl(2, 2).in_q == test::poly_q({{0, 1}, {2, 1}}));
    for (int r = 1; r <= 6; ++r)
        CHECK(mhp_sl(2, r).in_q == mhp_generic(WeylFamily::C, 1, r).in_q);

    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 3; ++r) {
            CHECK(mhp_gl(n, r).in_q == mhp_sl(n, r).in_q * (one_q() + q_var()).pow(r));
        }
    }
}

TEST_CASE("Sp closed form") {
    for (int r = 1; r <= 6; ++r) CHECK(mhp_sp(1, r).in_q == sp1_value(r));
    // hand average over the 5 classes of the order-8 Weyl group:
    // ((1+q)^4 + (1-q)^4 + 4(1-q^2)^2 + 2(1+q^2)^2) / 8
    CHECK(mhp_sp(2, 2).in_q == test::poly_q({{0, 1}, {2, 1}, {4, 1}}));
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            CHECK(mhp_sp(n, r).in_q == mhp_generic(WeylFamily::C, n, r).in_q);
}

TEST_CASE("specializations") {
    CHECK(specialize(mhp_gl(1, 1), Specialization::poincare) ==
          Polynomial::one({"t"}) + Polynomial::variable({"t"}, "t"));
    CHECK(specialize(mhp_sl(2, 2), Specialization::e_poly) ==
          test::poly_x({{0, 1}, {2, 1}}));
    // compactly supported Betti numbers of Sp_1 at rank 2: 1 + t^2
    CHECK(specialize(mhp_sp(1, 2), Specialization::poincare) ==
          Polynomial::one({"t"}) + Polynomial::monomial({"t"}, {2}, 1));
    CHECK(specialize(mhp_sp(1, 2), Specialization::euler) ==
          Polynomial::constant({}, 2));
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            CHECK(specialize(mhp_gl(n, r), Specialization::euler).is_zero());
}

TEST_CASE("coefficients are mixed Hodge numbers") {
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 3; ++r) {
            for (const MhpResult& m : {mhp_gl(n, r), mhp_sl(n, r), mhp_sp(n, r)}) {
                CHECK(m.in_q.has_integer_coeffs());
                CHECK(m.in_q.has_nonnegative_coeffs());
                CHECK(m.in_q.constant_term() == 1);
            }
        }
    }
}

TEST_CASE("degrees") {
    // even r: degree is exactly r * dim(T)
    CHECK(mhp_gl(3, 2).in_q.total_degree() == 6);
    CHECK(mhp_sp(2, 2).in_q.total_degree() == 4);
    CHECK(mhp_sl(3, 2).in_q.total_degree() == 4);
    // odd r: the top weight-invariants vanish; GL_2, r=1 is the classical
    // 1 + q of C^{n-1} x C*
    CHECK(mhp_gl(2, 1).in_q == test::poly_q({{0, 1}, {1, 1}}));
    CHECK(mhp_gl(3, 1).in_q == test::poly_q({{0, 1}, {1, 1}}));
    CHECK(mhp_sp(1, 1).in_q == one_q());
}

TEST_CASE("Hodge-Tate presentation in t,u,v") {
    MhpResult m = mhp_gl(2, 2);
    for (const auto& [e, c] : m.in_tuv.terms()) {
        CHECK(e[0] == e[1]);
        CHECK(e[1] == e[2]);
    }
    // q -> tuv is a bijection on terms
    CHECK(m.in_tuv.terms().size() == m.in_q.terms().size());
}

TEST_CASE("rank 0 is the one-point variety") {
    CHECK(mhp_gl(3, 0).in_q == one_q());
    CHECK(mhp_sp(2, 0).in_q == one_q());
    CHECK(mhp_generic(WeylFamily::A, 2, 0).in_q == one_q());
}
