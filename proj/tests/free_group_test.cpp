#include "doctest.h"

#include "chvar/free_group.hpp"

#include "test_util.hpp"

using namespace chvar;

namespace {
const std::vector<std::string> X{"x"};

Polynomial xm1() { return x_var() - Polynomial::one(X); }
} // namespace

TEST_CASE("b polynomials") {
    for (int r = 1; r <= 4; ++r) {
        FreeGroupEngine eng(r);
        CHECK(eng.b_poly(1) == -xm1().pow(r - 1));
    }
    FreeGroupEngine eng(2);
    // b_2 = -c_2 + c_1^2 = -(x-1)(x^2-1) + (x-1)^2 = -x (x-1)^2
    CHECK(eng.b_poly(2) == -(x_var() * xm1().pow(2)));
    // b_3 = -c_3 - b_1 c_2 - b_2 c_1 = -x^2 (x-1)^3 (x+2)
    CHECK(eng.b_poly(3) ==
          -(Polynomial::monomial(X, {2}, 1) * xm1().pow(3) *
            (x_var() + Polynomial::constant(X, 2))));

    SUBCASE("defining identity at order 8") {
        for (int r = 2; r <= 4; ++r) {
            FreeGroupEngine e(r);
            TruncSeries bs = TruncSeries::one(8, X);
            TruncSeries cs = TruncSeries::one(8, X);
            for (int n = 1; n <= 8; ++n) {
                bs.set_coeff(n, e.b_poly(n));
                cs.set_coeff(n, e.c_poly(n));
            }
            CHECK(series_mul(bs, cs) == TruncSeries::one(8, X));
        }
    }
}

TEST_CASE("irreducible locus E-polynomials") {
    for (int r = 1; r <= 4; ++r) {
        FreeGroupEngine eng(r);
        CHECK(eng.e_irr(1) == xm1().pow(r));
    }

    FreeGroupEngine eng(2);
    // x^2 (x-1)^3 - (x-1)^2
    Polynomial want = Polynomial::monomial(X, {2}, 1) * xm1().pow(3) - xm1().pow(2);
    CHECK(eng.e_irr(2) == want);

    // worked by hand through the divisor sum with b_1, b_2, b_3 above:
    // x (x-1)^2 (x^7 - 3x^5 + 2x^4 + x^3 - 2x^2 + x - 1)
    CHECK(eng.e_irr(3) ==
          test::poly_x({{10, 1}, {9, -2}, {8, -2}, {7, 8}, {6, -6},
                        {5, -2}, {4, 6}, {3, -5}, {2, 3}, {1, -1}}));

    // rank 1 free group is Z: no irreducible representations above n = 1
    FreeGroupEngine rank1(1);
    for (int n = 2; n <= 4; ++n) CHECK(rank1.e_irr(n).is_zero());
}

TEST_CASE("total E-polynomials through PExp") {
    for (int r = 1; r <= 3; ++r) {
        FreeGroupEngine eng(r);
        CHECK(eng.e_total(1) == xm1().pow(r));
    }

    FreeGroupEngine eng(2);
    // e_irr(2) + sym^2(e_irr(1)) = x^3 (x-1)^2
    Polynomial want = Polynomial::monomial(X, {3}, 1) * xm1().pow(2);
    CHECK(eng.e_total(2) == want);
    CHECK(eng.e_total(2) ==
          eng.e_irr(2) + eng.e_stratum(Partition({{1, 2}})));
}

TEST_CASE("strata") {
    FreeGroupEngine eng(2);
    CHECK(eng.e_stratum(Partition({{2, 1}})) == eng.e_irr(2));
    CHECK(eng.e_stratum(Partition({{3, 1}})) == eng.e_irr(3));
    CHECK(eng.e_stratum(Partition({{1, 2}})) ==
          test::poly_x({{4, 1}, {3, -2}, {2, 2}, {1, -2}, {0, 1}}));

    SUBCASE("strata partition the total") {
        for (int r = 1; r <= 2; ++r) {
            FreeGroupEngine e(r);
            for (int n = 1; n <= 3; ++n) {
                Polynomial sum(X);
                for (const auto& part : partitions(n)) sum += e.e_stratum(part);
                CHECK(sum == e.e_total(n));
            }
        }
    }

    SUBCASE("every stratum is divisible by (x-1)^r") {
        for (int r = 1; r <= 3; ++r) {
            FreeGroupEngine e(r);
            for (int n = 1; n <= 4; ++n) {
                for (const auto& part : partitions(n)) {
                    CHECK(e.e_sl_pgl_stratum(part) * xm1().pow(r) == e.e_stratum(part));
                }
            }
        }
    }
}

TEST_CASE("SL and PGL values") {
    for (int r = 1; r <= 3; ++r) {
        FreeGroupEngine eng(r);
        CHECK(eng.e_sl_pgl(1) == Polynomial::one(X));
    }

    FreeGroupEngine eng(2);
    CHECK(eng.e_sl_pgl(2) == Polynomial::monomial(X, {3}, 1));
    CHECK(eng.e_sl_pgl_stratum(Partition({{1, 2}})) == test::poly_x({{2, 1}, {0, 1}}));
}

TEST_CASE("rank 1: the classical conjugation quotients") {
    // hom(Z, GL_n) // GL_n is Sym^n(C*) with E = x^{n-1}(x-1); the SL_n
    // quotient is the affine space C^{n-1}
    FreeGroupEngine eng(1);
    for (int n = 1; n <= 5; ++n) {
        CHECK(eng.e_total(n) == Polynomial::monomial(X, {n - 1}, 1) * xm1());
        CHECK(eng.e_sl_pgl(n) == Polynomial::monomial(X, {n - 1}, 1));
    }
}

TEST_CASE("rank 1: duality between the two engines") {
    // At r = 1 both engines see the same smooth variety. The Weyl-average
    // values carry the ordinary-cohomology normalization (constant term 1),
    // the free-group values the compactly supported one; on a smooth
    // d-dimensional Hodge-Tate variety they are related by
    // E_c(x) = x^d E(1/x).
    auto flip = [](const Polynomial& p, int dim) {
        Polynomial out(p.vars());
        for (const auto& [e, c] : p.terms())
            out += Polynomial::monomial(p.vars(), {dim - e[0]}, c);
        return out;
    };
    FreeGroupEngine eng(1);
    for (int n = 1; n <= 5; ++n) {
        Polynomial gl_ord = specialize(mhp_gl(n, 1), Specialization::e_poly);
        CHECK(eng.e_total(n) == flip(gl_ord, n));
        Polynomial sl_ord = specialize(mhp_sl(n, 1), Specialization::e_poly);
        CHECK(eng.e_sl_pgl(n) == flip(sl_ord, n - 1));
    }
}

TEST_CASE("structural properties of totals") {
    for (int r = 1; r <= 3; ++r) {
        FreeGroupEngine eng(r);
        for (int n = 1; n <= 3; ++n) {
            Polynomial total = eng.e_total(n);
            CHECK(total.has_integer_coeffs());
            CHECK(total.eval_at_one("x").is_zero());
            if (n >= 2 && r >= 2)
                CHECK(total.total_degree() == static_cast<long>(r - 1) * n * n + 1);
        }
    }
}

TEST_CASE("plog recovers the irreducible series") {
    for (int r = 1; r <= 3; ++r) {
        FreeGroupEngine eng(r);
        TruncSeries irr = eng.irr_series(4);
        TruncSeries total = pexp(irr);
        CHECK(plog(total) == irr);
        for (int n = 1; n <= 4; ++n) CHECK(total.coeff(n) == eng.e_total(n));
    }
}

TEST_CASE("report wrappers") {
    EPolyReport rep = e_total_gl(2, 2);
    CHECK(rep.kind == EKind::total);
    CHECK(rep.group.family == Family::GL);
    CHECK(rep.value == e_sl_pgl(2, 2).value * xm1().pow(2));

    CHECK_THROWS_AS(e_stratum_gl(3, 2, Partition::parse("1^1 3^1")), std::domain_error);
    CHECK_THROWS_AS(e_sl_pgl(2, 2, {}, Family::Sp), std::domain_error);
    CHECK(e_sl_pgl(2, 2, {}, Family::PGL).value == e_sl_pgl(2, 2).value);
    CHECK(e_sl_pgl(2, 2, Partition::parse("1^2")).value == test::poly_x({{2, 1}, {0, 1}}));
}
