#include <doctest.h>

#include "bch_atlas/cosets.hpp"
#include "bch_atlas/leaders.hpp"

using namespace bch_atlas;

TEST_CASE("primitive leaders") {
    CHECK(primitive_max_rank(10) == 4);
    CHECK(primitive_max_rank(4) == 3);
    const u64 expect[] = {511, 495, 479, 447};
    for (unsigned i = 1; i <= 4; ++i) CHECK(primitive_delta(2, 10, i).value == expect[i - 1]);
    // the second leader sits in a half-size coset when m is even
    CHECK(primitive_delta(2, 10, 2).coset_size == 5);
    CHECK(primitive_delta(2, 9, 2).coset_size == 9);
    CHECK(primitive_delta(2, 6, 3).value == 23);
}

TEST_CASE("primitive band classification matches enumeration at (2,4)") {
    const auto ctx = CosetContext::make(2, 255);
    for (u64 a = 17; a <= 32; ++a) {
        if (a % 2 == 0) continue;
        const auto c = primitive_band_classify(2, 4, a);
        const bool leader = leader_of(ctx, a) == a;
        CHECK(leader == (c != BandClass::NotLeader));
        if (c == BandClass::LeaderHalf) CHECK(coset_size(ctx, a) == 4);
    }
}

TEST_CASE("anti-primitive leaders") {
    CHECK(anti_delta(2, 5, 1)->value == 165);
    CHECK(anti_delta(2, 5, 1)->coset_size == 5);
    CHECK(anti_delta(2, 5, 2)->value == 149);
    CHECK(anti_delta(2, 5, 2)->coset_size == 10);
    CHECK(anti_delta(3, 3, 2)->value == 101);
    CHECK_FALSE(anti_delta(2, 2, 2).covered());
    CHECK_FALSE(anti_delta(2, 4, 2).covered());
    CHECK(anti_delta(2, 4, 1).covered());
}

TEST_CASE("anti-primitive interval classification at (2,4)") {
    const auto ctx = CosetContext::make(2, 85);
    for (u64 i = 8; i * 3 < 33; ++i) {
        if (i % 2 == 0) continue;
        const auto v = anti_interval_is_leader(2, 4, i);
        CHECK(v.leader == (leader_of(ctx, i) == i));
    }
}

TEST_CASE("projective leaders") {
    CHECK(proj_delta1(4, 5).value == 233);
    CHECK(proj_delta2(4, 5)->value == 229);
    CHECK_FALSE(proj_delta2(3, 5).covered());
    CHECK_FALSE(proj_delta2(5, 9).covered());
    CHECK_FALSE(proj_delta2(4, 4).covered());
    const auto ctx = CosetContext::make(4, 341);
    for (u64 i = 1; i < ctx.n; ++i) {
        if (leader_of(ctx, i) == i) CHECK(proj_leader_necessary(4, 5, i));
    }
}
