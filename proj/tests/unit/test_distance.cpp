#include <doctest.h>

#include <tuple>

#include "bch_atlas/codes.hpp"
#include "bch_atlas/distance.hpp"
#include "bch_atlas/family.hpp"

using namespace bch_atlas;

namespace {
std::vector<u64> dual_rows(const CosetPartition& part, const BchCode& code) {
    std::vector<u64> rows;
    for (u64 r : dualize(code.defining_set)) {
        if (part.leader(part.id_of(r)) == r) rows.push_back(r);
    }
    return rows;
}
}  // namespace

TEST_CASE("exhaustive distance of small codes") {
    const CosetPartition part(CosetContext::make(2, 15));
    const auto tower = build_tower_for(2, 4);
    const auto r = exhaustive_min_distance(make_code(part, 7, 1), tower);
    CHECK(r.distance == 7);
    CHECK(r.codewords == 31);
    CHECK(r.support.size() == 7);
    CHECK(exhaustive_min_distance(make_code(part, 5, 1), tower).distance == 5);
    CHECK(exhaustive_min_distance(make_code(part, 3, 1), tower).distance == 3);
}

TEST_CASE("exhaustive distance over a nonbinary field") {
    const CosetPartition part(CosetContext::make(3, 26));
    const auto tower = build_tower_for(3, 3);
    // ternary codes of length 26: sweep against the Bose bound
    for (u64 d = 8; d <= 14; ++d) {
        const auto code = make_code(part, d, 1);
        const u64 dist = exhaustive_min_distance(code, tower).distance;
        CHECK(dist >= bose_distance(code.defining_set));
        CHECK(dist <= sphere_packing_max_d(26, code.dimension, 3));
    }
}

TEST_CASE("the [341,16] anti-primitive code") {
    const CosetPartition part(FamilyParams::make(Family::AntiPrimitive, 2, 5).context());
    const auto code = make_code(part, 149, 1);
    const auto tower = build_tower_for(2, 10);
    CHECK(exhaustive_min_distance(code, tower).distance == 149);
}

TEST_CASE("budget and dimension guards") {
    const CosetPartition part(CosetContext::make(2, 15));
    const auto tower = build_tower_for(2, 4);
    Budgets b;
    b.max_codewords = 8;
    CHECK_THROWS_AS(exhaustive_min_distance(make_code(part, 5, 1), tower, b), Error);
    // delta = n leaves the repetition code
    CHECK(exhaustive_min_distance(make_code(part, 15, 1), tower).distance == 15);
    CHECK_THROWS_AS(exhaustive_min_distance(tilde_code(part, 15), tower), Error);
}

TEST_CASE("low-weight search on duals of top-band codes") {
    const CosetPartition part(FamilyParams::make(Family::AntiPrimitive, 2, 5).context());
    const auto tower = build_tower_for(2, 10);
    const auto at149 = low_weight_search(dual_rows(part, make_code(part, 149, 1)), tower, 341, 4);
    CHECK(at149.weight == 4);
    CHECK(at149.support.front() == 0);
    CHECK(at149.budget_consumed == 929);
    const auto at160 = low_weight_search(dual_rows(part, make_code(part, 160, 1)), tower, 341, 4);
    CHECK(at160.weight == 2);
    const auto none = low_weight_search(dual_rows(part, make_code(part, 149, 1)), tower, 341, 3);
    CHECK_FALSE(none.weight.has_value());
}

TEST_CASE("low-weight search agrees with a full sweep") {
    // parity checks from the defining set leaders describe the code itself
    for (auto [q, n, m] : std::vector<std::tuple<u64, u64, unsigned>>{{2, 15, 4}, {2, 21, 6}, {3, 13, 3}, {4, 15, 2}}) {
        const CosetPartition part(CosetContext::make(q, n));
        const auto tower = build_tower_for(q, m);
        for (u64 d = 2; d <= n; ++d) {
            const auto code = make_code(part, d, 1);
            if (code.dimension == 0 || code.dimension > 12) continue;
            const u64 exact = exhaustive_min_distance(code, tower).distance;
            const auto lw = low_weight_search(code.defining_set.coset_leaders, tower, n, 4);
            if (exact <= 4) CHECK(lw.weight == exact);
            else CHECK_FALSE(lw.weight.has_value());
        }
    }
}

TEST_CASE("Hamming bound") {
    CHECK(sphere_packing_max_d(341, 335, 2) == 2);
    CHECK(sphere_packing_max_d(341, 330, 2) == 4);
    CHECK(sphere_packing_max_d(5, 5, 3) == 1);
    CHECK(sphere_packing_max_d(15, 5, 2) == 8);
    CHECK(sphere_packing_max_d(7, 4, 2) == 4);
}

TEST_CASE("divisor-multiple distances") {
    CHECK(divisor_multiple_distance(2, 341, 31) == 31);
    CHECK(divisor_multiple_distance(2, 341, 11) == 11);
    CHECK_FALSE(divisor_multiple_distance(2, 341, 149).has_value());
}
