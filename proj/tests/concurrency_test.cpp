#include "doctest.h"

#include <thread>
#include <vector>

#include "chvar/abelian.hpp"
#include "chvar/free_group.hpp"

using namespace chvar;

// Values are immutable and all operations pure, so concurrent computation of
// the same quantities must agree bit-for-bit with the serial results.
TEST_CASE("parallel recomputation is deterministic") {
    const Polynomial gl = mhp_gl(4, 3).in_q;
    const Polynomial sp = mhp_sp(3, 2).in_q;
    const Polynomial et = FreeGroupEngine(3).e_total(3);

    std::vector<int> ok(8, 0);
    std::vector<std::thread> workers;
    for (int i = 0; i < 8; ++i) {
        workers.emplace_back([&, i] {
            FreeGroupEngine engine(3); // one engine per thread
            bool good = mhp_gl(4, 3).in_q == gl && mhp_sp(3, 2).in_q == sp &&
                        engine.e_total(3) == et;
            ok[i] = good ? 1 : 0;
        });
    }
    for (auto& w : workers) w.join();
    for (int i = 0; i < 8; ++i) CHECK(ok[i] == 1);
}

TEST_CASE("values move freely across threads") {
    Polynomial produced;
    std::thread producer([&] { produced = mhp_sl(3, 2).in_q; });
    producer.join();
    CHECK(produced == mhp_sl(3, 2).in_q);
    CHECK(produced.has_nonnegative_coeffs());
}
