#pragma once

// Self-check suites behind the CLI `check` subcommand: closed forms against
// brute-force Weyl averages, class equations against group enumeration,
// plethystic round trips on randomized series, and the free-group engine's
// defining identities. Each item reports pass/fail plus a counterexample
// payload on failure.

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "chvar/abelian.hpp"
#include "chvar/free_group.hpp"
#include "chvar/partitions.hpp"
#include "chvar/polynomial.hpp"
#include "chvar/series.hpp"
#include "chvar/weyl.hpp"

namespace chvar {

struct CheckItem {
    std::string name;
    bool pass = true;
    std::string detail; // counterexample JSON when failed, empty otherwise
};

namespace verify_detail {

using Json = nlohmann::ordered_json;

inline void expect(std::vector<CheckItem>& items, const std::string& name, bool ok,
                   const Json& counterexample = {}) {
    items.push_back(CheckItem{name, ok, ok ? "" : counterexample.dump()});
}

inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<std::string>& vars,
                                    int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::uniform_int_distribution<int> coef(-4, 4);
    Polynomial p(vars);
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        std::vector<int> e(vars.size());
        for (auto& k : e) k = expo(rng);
        int c = coef(rng);
        if (c == 0) c = 1;
        p += Polynomial::monomial(vars, std::move(e), c);
    }
    return p;
}

inline TruncSeries random_series(std::mt19937& rng, int order,
                                 const std::vector<std::string>& vars, int max_deg) {
    TruncSeries f(order, vars);
    for (int k = 1; k <= order; ++k) {
        // keep roughly half the coefficients occupied
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
        f.set_coeff(k, random_polynomial(rng, vars, max_deg, 3));
    }
    return f;
}

} // namespace verify_detail

// Element-by-element det-oracle validation plus class data against
// brute-force enumeration.
inline std::vector<CheckItem> check_weyl(int max_n_a = 4, int max_n_c = 3, int max_r = 3) {
    using verify_detail::expect;
    using verify_detail::Json;
    std::vector<CheckItem> items;

    // surface over-cap requests before doing any work
    if (max_n_a > kWeylEnumCapA)
        throw capacity_error("weyl suite capped at n = " + std::to_string(kWeylEnumCapA) +
                             " for type A");
    if (max_n_c > kWeylEnumCapC)
        throw capacity_error("weyl suite capped at n = " + std::to_string(kWeylEnumCapC) +
                             " for type C");

    for (int n = 1; n <= max_n_a; ++n) {
        auto elems = enumerate_weyl(WeylFamily::A, n);
        expect(items, "A" + std::to_string(n) + ": |W| = n!",
               Integer(static_cast<long>(elems.size())) == factorial(n));
        bool all_match = true;
        Json witness;
        std::map<CycleType, long> tally;
        for (const auto& g : elems) {
            CycleType ct = cycle_type(g);
            ++tally[ct];
            for (int r = 1; r <= std::min(max_r, 3) && all_match; ++r) {
                if (char_factor_from_cycles(ct, r) != det_oracle(g, r)) {
                    all_match = false;
                    witness = Json{{"n", n}, {"r", r},
                                   {"cycle_type", ct.positive.str()},
                                   {"factor", char_factor_from_cycles(ct, r).str()},
                                   {"det", det_oracle(g, r).str()}};
                }
            }
        }
        expect(items, "A" + std::to_string(n) + ": cycle factor = det oracle, all g",
               all_match, witness);
        expect(items, "A" + std::to_string(n) + ": #classes = #partitions",
               static_cast<int>(tally.size()) == static_cast<int>(partitions(n).size()),
               Json{{"classes", tally.size()}, {"partitions", partitions(n).size()}});
        bool sizes_ok = true;
        Json size_witness;
        for (const auto& [ct, count] : tally) {
            if (Integer(count) != sn_class_size(ct.positive)) {
                sizes_ok = false;
                size_witness = Json{{"cycle_type", ct.positive.str()},
                                    {"counted", count},
                                    {"formula", sn_class_size(ct.positive).get_str()}};
            }
        }
        expect(items, "A" + std::to_string(n) + ": counted class sizes = formula",
               sizes_ok, size_witness);
    }

    for (int n = 1; n <= max_n_c; ++n) {
        auto elems = enumerate_weyl(WeylFamily::C, n);
        expect(items, "C" + std::to_string(n) + ": |W| = 2^n n!",
               Integer(static_cast<long>(elems.size())) == weyl_order(WeylFamily::C, n));
        bool all_match = true;
        Json witness;
        std::map<CycleType, long> tally;
        for (const auto& g : elems) {
            CycleType ct = cycle_type(g);
            ++tally[ct];
            for (int r = 1; r <= std::min(max_r, 3) && all_match; ++r) {
                if (char_factor_from_cycles(ct, r) != det_oracle(g, r)) {
                    all_match = false;
                    witness = Json{{"n", n}, {"r", r},
                                   {"positive", ct.positive.str()},
                                   {"negative", ct.negative.str()}};
                }
            }
        }
        expect(items, "C" + std::to_string(n) + ": cycle factor = det oracle, all g",
               all_match, witness);
        expect(items, "C" + std::to_string(n) + ": #classes = #bipartitions",
               static_cast<int>(tally.size()) == static_cast<int>(bipartitions(n).size()),
               Json{{"classes", tally.size()}, {"bipartitions", bipartitions(n).size()}});
        bool sizes_ok = true;
        Integer total = 0;
        Json size_witness;
        for (const auto& [ct, count] : tally) {
            total += count;
            Bipartition bp{ct.positive, ct.negative};
            if (Integer(count) != hyperoct_class_size(bp)) {
                sizes_ok = false;
                size_witness = Json{{"positive", ct.positive.str()},
                                    {"negative", ct.negative.str()},
                                    {"counted", count},
                                    {"formula", hyperoct_class_size(bp).get_str()}};
            }
        }
        expect(items, "C" + std::to_string(n) + ": counted class sizes = formula",
               sizes_ok, size_witness);
        expect(items, "C" + std::to_string(n) + ": class equation",
               total == weyl_order(WeylFamily::C, n));
    }
    return items;
}

// Closed forms against the brute-force Weyl average, the GL/SL
// factorization, the Sp_1 = SL_2 match and specialization coherence.
inline std::vector<CheckItem> check_abel(int max_n_a = 4, int max_n_c = 3, int max_r = 3) {
    using verify_detail::expect;
    using verify_detail::Json;
    std::vector<CheckItem> items;
    const Polynomial one_q = Polynomial::one({"q"});

    for (int n = 1; n <= max_n_a; ++n) {
        for (int r = 1; r <= max_r; ++r) {
            MhpResult closed = mhp_gl(n, r);
            MhpResult generic = mhp_generic(WeylFamily::A, n, r);
            expect(items,
                   "GL(" + std::to_string(n) + "), r=" + std::to_string(r) +
                       ": closed form = Weyl average",
                   closed.in_q == generic.in_q,
                   Json{{"closed", closed.in_q.str()}, {"generic", generic.in_q.str()}});
            MhpResult sl = mhp_sl(n, r);
            Polynomial recomposed =
                sl.in_q * (one_q + q_var()).pow(static_cast<unsigned long>(r));
            expect(items,
                   "GL(" + std::to_string(n) + "), r=" + std::to_string(r) +
                       ": mu(GL) = mu(SL) (1+q)^r",
                   closed.in_q == recomposed,
                   Json{{"gl", closed.in_q.str()}, {"sl_times_torus", recomposed.str()}});
        }
    }
    for (int n = 1; n <= max_n_c; ++n) {
        for (int r = 1; r <= max_r; ++r) {
            MhpResult closed = mhp_sp(n, r);
            MhpResult generic = mhp_generic(WeylFamily::C, n, r);
            expect(items,
                   "Sp(" + std::to_string(n) + "), r=" + std::to_string(r) +
                       ": closed form = Weyl average",
                   closed.in_q == generic.in_q,
                   Json{{"closed", closed.in_q.str()}, {"generic", generic.in_q.str()}});
        }
    }
    for (int r = 1; r <= std::max(max_r, 6); ++r) {
        Polynomial expected =
            ((one_q + q_var()).pow(static_cast<unsigned long>(r)) +
             (one_q - q_var()).pow(static_cast<unsigned long>(r))) /
            Rational(2);
        bool ok = mhp_sp(1, r).in_q == expected && mhp_sl(2, r).in_q == expected;
        expect(items, "Sp(1) = SL(2), r=" + std::to_string(r), ok,
               Json{{"sp1", mhp_sp(1, r).in_q.str()}, {"sl2", mhp_sl(2, r).in_q.str()}});
    }
    for (int n = 1; n <= max_n_a; ++n) {
        for (int r = 1; r <= max_r; ++r) {
            MhpResult m = mhp_gl(n, r);
            Polynomial mu_at = m.in_tuv.substitute({{"t", Polynomial::constant({}, -1)},
                                                    {"u", Polynomial::constant({}, 1)},
                                                    {"v", Polynomial::constant({}, 1)}},
                                                   {});
            Polynomial e_at_one = specialize(m, Specialization::e_poly).eval_at_one("x");
            Polynomial euler = specialize(m, Specialization::euler);
            bool ok = mu_at == e_at_one && euler == mu_at && euler.is_zero();
            expect(items,
                   "GL(" + std::to_string(n) + "), r=" + std::to_string(r) +
                       ": specialization coherence, chi = 0",
                   ok,
                   Json{{"mu(-1,1,1)", mu_at.str()},
                        {"E(1)", e_at_one.str()},
                        {"euler", euler.str()}});
        }
    }
    return items;
}

// Frozen plethystic identities plus randomized round trips.
inline std::vector<CheckItem> check_pleth(int cases = 25, int order = 6,
                                          unsigned seed = 20250808) {
    using verify_detail::expect;
    using verify_detail::Json;
    std::vector<CheckItem> items;

    {
        TruncSeries f(3, {"x"});
        f.set_coeff(1, x_var());
        TruncSeries expected(3, {"x"});
        expected.set_coeff(1, x_var());
        expected.set_coeff(2, Polynomial::monomial({"x"}, {2}, Rational(1, 2)));
        expected.set_coeff(3, Polynomial::monomial({"x"}, {3}, Rational(1, 3)));
        expect(items, "psi(x z) = sum x^l z^l / l", psi(f) == expected);
    }
    {
        const int n = 6;
        TruncSeries f(n, {"x"});
        f.set_coeff(1, x_var());
        TruncSeries geometric(n, {"x"});
        for (int k = 0; k <= n; ++k)
            geometric.set_coeff(k, Polynomial::monomial({"x"}, {k}, 1));
        expect(items, "pexp(x z) = geometric series", pexp(f) == geometric);
        expect(items, "plog(geometric series) = x z", plog(geometric) == f);
    }
    expect(items, "pexp(0) = 1",
           pexp(TruncSeries(4, {"x"})) == TruncSeries::one(4, {"x"}));
    expect(items, "plog(1) = 0",
           plog(TruncSeries::one(4, {"x"})) == TruncSeries(4, {"x"}));

    std::mt19937 rng(seed);
    const std::vector<std::vector<std::string>> var_choices{
        {"x"}, {"u", "v"}, {"t", "u", "v"}};
    bool round_ok = true, mult_ok = true, first_ok = true;
    Json round_witness, mult_witness, first_witness;
    for (int i = 0; i < cases; ++i) {
        const auto& vars = var_choices[static_cast<size_t>(i) % var_choices.size()];
        TruncSeries f = verify_detail::random_series(rng, order, vars, 4);
        TruncSeries g = verify_detail::random_series(rng, order, vars, 4);
        TruncSeries ef = pexp(f);
        if (round_ok && plog(ef) != f) {
            round_ok = false;
            round_witness = Json{{"case", i}};
        }
        if (round_ok && pexp(plog(ef)) != ef) {
            round_ok = false;
            round_witness = Json{{"case", i}, {"direction", "pexp(plog(.))"}};
        }
        if (mult_ok && pexp(f + g) != series_mul(ef, pexp(g))) {
            mult_ok = false;
            mult_witness = Json{{"case", i}};
        }
        if (first_ok && pexp(f).coeff(1) != f.coeff(1)) {
            first_ok = false;
            first_witness = Json{{"case", i}};
        }
    }
    expect(items, "plog . pexp = id (randomized)", round_ok, round_witness);
    expect(items, "pexp(f+g) = pexp(f) pexp(g) (randomized)", mult_ok, mult_witness);
    expect(items, "first-order law (randomized)", first_ok, first_witness);
    return items;
}

// Free-group engine identities: the b_n product identity, strata sums,
// torus divisibility with the SL_2 sign gate, and the PLog inverse.
inline std::vector<CheckItem> check_free(int max_n = 4, int max_r = 3) {
    using verify_detail::expect;
    using verify_detail::Json;
    std::vector<CheckItem> items;
    const Polynomial one_x = Polynomial::one({"x"});

    {
        bool ok = true;
        for (int n = 1; n <= 50 && ok; ++n) {
            int sum = 0;
            for (int d : divisors(n)) sum += moebius(d);
            ok = sum == (n == 1 ? 1 : 0);
        }
        expect(items, "moebius divisor sums", ok);
    }

    for (int r = 2; r <= std::max(max_r, 2); ++r) {
        const int order = 8;
        FreeGroupEngine eng(r);
        TruncSeries bs = TruncSeries::one(order, {"x"});
        TruncSeries cs = TruncSeries::one(order, {"x"});
        for (int n = 1; n <= order; ++n) {
            bs.set_coeff(n, eng.b_poly(n));
            cs.set_coeff(n, eng.c_poly(n));
        }
        expect(items, "b_n defining identity, r=" + std::to_string(r),
               series_mul(bs, cs) == TruncSeries::one(order, {"x"}));
    }

    {
        bool ok = true;
        Json witness;
        for (int n = 2; n <= max_n && ok; ++n) {
            FreeGroupEngine eng(1);
            if (!eng.e_irr(n).is_zero()) {
                ok = false;
                witness = Json{{"n", n}, {"value", eng.e_irr(n).str()}};
            }
        }
        expect(items, "E(irr GL_n, r=1) = 0 for n >= 2", ok, witness);
    }

    for (int r = 1; r <= max_r; ++r) {
        FreeGroupEngine eng(r);
        for (int n = 1; n <= max_n; ++n) {
            Polynomial total = eng.e_total(n);
            Polynomial strata_sum({"x"});
            for (const auto& part : partitions(n)) strata_sum += eng.e_stratum(part);
            expect(items,
                   "strata sum = total, n=" + std::to_string(n) + ", r=" + std::to_string(r),
                   strata_sum == total,
                   Json{{"total", total.str()}, {"strata_sum", strata_sum.str()}});
            Polynomial torus = (x_var() - one_x).pow(static_cast<unsigned long>(r));
            bool divisible = true;
            std::string quotient;
            try {
                quotient = total.exact_div(torus).str();
            } catch (const divisibility_error&) {
                divisible = false;
            }
            expect(items,
                   "(x-1)^r | E(GL_n), n=" + std::to_string(n) + ", r=" + std::to_string(r),
                   divisible, Json{{"total", total.str()}});
            expect(items,
                   "chi(GL_n) = 0, n=" + std::to_string(n) + ", r=" + std::to_string(r),
                   total.eval_at_one("x").is_zero(), Json{{"total", total.str()}});
            if (n >= 2 && r >= 2) {
                long expected_deg = static_cast<long>(r - 1) * n * n + 1;
                expect(items,
                       "deg E(GL_n) = (r-1) n^2 + 1, n=" + std::to_string(n) +
                           ", r=" + std::to_string(r),
                       total.total_degree() == expected_deg,
                       Json{{"degree", total.total_degree()}, {"expected", expected_deg}});
            }
        }
        // PLog recovers the irreducible series from the total series.
        const int order = std::min(max_n + 1, 5);
        FreeGroupEngine eng2(r);
        TruncSeries irr = eng2.irr_series(order);
        expect(items, "plog(total series) = irr series, r=" + std::to_string(r),
               plog(pexp(irr)) == irr);
    }

    {
        FreeGroupEngine eng(2);
        Polynomial x3 = Polynomial::monomial({"x"}, {3}, 1);
        expect(items, "sign gate: E(SL_2 free rank 2) = x^3", eng.e_sl_pgl(2) == x3,
               Json{{"value", eng.e_sl_pgl(2).str()}});
    }
    return items;
}

inline std::vector<CheckItem> check_all(int max_n = 4, int max_r = 3) {
    std::vector<CheckItem> items;
    auto append = [&items](std::vector<CheckItem> more) {
        for (auto& item : more) items.push_back(std::move(item));
    };
    append(check_weyl(std::min(max_n, kWeylEnumCapA), std::min(max_n, kWeylEnumCapC), max_r));
    append(check_abel(max_n, std::min(max_n, kWeylEnumCapC), max_r));
    append(check_pleth());
    append(check_free(max_n, max_r));
    return items;
}

} // namespace chvar
