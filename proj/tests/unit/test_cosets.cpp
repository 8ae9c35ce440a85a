#include <doctest.h>

#include "bch_atlas/cosets.hpp"
#include "bch_atlas/error.hpp"

using namespace bch_atlas;

TEST_CASE("cosets modulo 15") {
    const auto ctx = CosetContext::make(2, 15);
    CHECK(ctx.m == 4);
    CHECK(coset_of(ctx, 1).elements == std::vector<u64>{1, 2, 4, 8});
    CHECK(coset_of(ctx, 10).leader == 5);
    CHECK(coset_size(ctx, 5) == 2);
    CHECK(leader_of(ctx, 14) == 7);
    const CosetPartition part(ctx);
    CHECK(part.count() == 5);
    u64 total = 0;
    for (const auto& e : part.leaders()) total += e.size;
    CHECK(total == 15);
}

TEST_CASE("multiplicative order") {
    CHECK(mult_order(2, 341) == 10);
    CHECK(mult_order(3, 182) == 6);
    CHECK(mult_order(4, 341) == 5);
    CHECK_THROWS_AS(mult_order(2, 10), Error);
}

TEST_CASE("largest leaders by enumeration") {
    CHECK(k_largest_leaders(CosetContext::make(2, 63), 3) ==
          std::vector<LeaderEntry>{{31, 6}, {27, 3}, {23, 6}});
    const auto big = k_largest_leaders(CosetContext::make(2, 1023), 4);
    CHECK(big == std::vector<LeaderEntry>{{511, 10}, {495, 5}, {479, 10}, {447, 10}});
    CHECK(k_largest_leaders(CosetContext::make(2, 341), 2) == std::vector<LeaderEntry>{{165, 5}, {149, 10}});
}

TEST_CASE("budget refusal") {
    Budgets b;
    b.max_enum = 100;
    CHECK_THROWS_AS(CosetPartition(CosetContext::make(2, 1023), b), Error);
    CHECK_THROWS_AS(k_largest_leaders(CosetContext::make(2, 1023), 2, b), Error);
}

TEST_CASE("q-adic digits and rotation") {
    CHECK(q_digits(11, 2, 4) == std::vector<unsigned>{1, 0, 1, 1});
    CHECK(from_q_digits({1, 0, 1, 1}, 2) == 11);
    const auto ctx = CosetContext::make(2, 15);
    CHECK(rotate_residue(ctx, 3, 1) == 6);
    CHECK(rotate_residue(ctx, 9, 1) == 3);
}

TEST_CASE("run-length forms round trip") {
    const auto ctx = CosetContext::make(4, 341);
    u64 seen = 0;
    for (u64 t = 0; t < ctx.n; ++t) {
        const auto f = run_length_form(ctx, t);
        if (!f) continue;
        ++seen;
        CHECK(from_q_digits(f->digits(), 4) == t);
    }
    CHECK(seen > 0);
}
