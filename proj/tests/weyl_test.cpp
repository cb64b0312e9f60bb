#include "doctest.h"

#include <map>

#include "chvar/weyl.hpp"

#include "test_util.hpp"

using namespace chvar;

TEST_CASE("enumeration sizes") {
    CHECK(enumerate_weyl(WeylFamily::A, 3).size() == 6);
    CHECK(enumerate_weyl(WeylFamily::C, 2).size() == 8);
    CHECK(enumerate_weyl(WeylFamily::C, 1).size() == 2);
    CHECK_THROWS_AS(enumerate_weyl(WeylFamily::A, kWeylEnumCapA + 1), capacity_error);
    CHECK_THROWS_AS(enumerate_weyl(WeylFamily::C, kWeylEnumCapC + 1), capacity_error);
}

TEST_CASE("cycle types") {
    SignedPerm id3{{0, 1, 2}, {1, 1, 1}};
    CycleType ct = cycle_type(id3);
    CHECK(ct.positive == Partition({{1, 3}}));
    CHECK(ct.negative.empty());

    SignedPerm swap2{{1, 0}, {1, 1}};
    CHECK(cycle_type(swap2).positive == Partition({{2, 1}}));

    SignedPerm flip1{{0}, {-1}};
    CHECK(cycle_type(flip1).positive.empty());
    CHECK(cycle_type(flip1).negative == Partition({{1, 1}}));
}

TEST_CASE("characteristic factors from cycle types") {
    Polynomial one = Polynomial::one({"q"});
    Polynomial q = q_var();

    CHECK(char_factor_from_cycles(CycleType{Partition({{1, 2}}), Partition()}, 1) ==
          (one + q).pow(2));
    // a 2-cycle: det of I + q [[0,1],[1,0]]
    CHECK(char_factor_from_cycles(CycleType{Partition({{2, 1}}), Partition()}, 1) ==
          one - q.pow(2));
    // a negative 1-cycle: det(1 + q(-1))
    CHECK(char_factor_from_cycles(CycleType{Partition(), Partition({{1, 1}})}, 1) ==
          one - q);
}

TEST_CASE("determinant oracle on explicit matrices") {
    Polynomial one = Polynomial::one({"q"});
    Polynomial q = q_var();

    CHECK(det_oracle(SignedPerm{{0, 1}, {1, 1}}, 1) == (one + q).pow(2));
    CHECK(det_oracle(SignedPerm{{1, 0}, {1, 1}}, 1) == one - q.pow(2));
    CHECK(det_oracle(SignedPerm{{0}, {-1}}, 2) == (one - q).pow(2));
    // a negative 2-cycle is a rotation: det(I + q R) = 1 + q^2
    CHECK(det_oracle(SignedPerm{{1, 0}, {-1, 1}}, 1) == one + q.pow(2));
}

TEST_CASE("cycle factor equals det oracle for every element") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : enumerate_weyl(WeylFamily::A, n)) {
            CycleType ct = cycle_type(g);
            for (int r = 1; r <= 3; ++r)
                CHECK(char_factor_from_cycles(ct, r) == det_oracle(g, r));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : enumerate_weyl(WeylFamily::C, n)) {
            CycleType ct = cycle_type(g);
            for (int r = 1; r <= 3; ++r)
                CHECK(char_factor_from_cycles(ct, r) == det_oracle(g, r));
        }
    }
}

TEST_CASE("enumerated class data matches the formulas") {
    for (int n = 1; n <= 4; ++n) {
        std::map<CycleType, long> tally;
        for (const auto& g : enumerate_weyl(WeylFamily::A, n)) ++tally[cycle_type(g)];
        CHECK(tally.size() == partitions(n).size());
        Integer total = 0;
        for (const auto& [ct, count] : tally) {
            CHECK(ct.negative.empty());
            CHECK(Integer(count) == sn_class_size(ct.positive));
            total += count;
        }
        CHECK(total == factorial(n));
    }
    for (int n = 1; n <= 4; ++n) {
        std::map<CycleType, long> tally;
        for (const auto& g : enumerate_weyl(WeylFamily::C, n)) ++tally[cycle_type(g)];
        CHECK(tally.size() == bipartitions(n).size());
        Integer total = 0;
        for (const auto& [ct, count] : tally) {
            CHECK(Integer(count) ==
                  hyperoct_class_size(Bipartition{ct.positive, ct.negative}));
            total += count;
        }
        CHECK(total == weyl_order(WeylFamily::C, n));
    }
}
