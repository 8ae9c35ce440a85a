#pragma once

#include <string>
#include <vector>

#include "bch_atlas/arith.hpp"
#include "bch_atlas/error.hpp"

namespace bch_atlas {

// Closed-form coset leaders. Every formula is evaluated in exact integers and
// divisions assert divisibility; a failed assertion means the formula itself
// is not integral at that input.

struct LeaderResult {
    u64 value = 0;
    u64 coset_size = 0;
    unsigned rank = 0;
    std::string provenance;
};

// i-th largest leader modulo q^m - 1.
// Ranks 1 and 2 for any m >= 2; rank >= 3 needs i <= m - floor((m-1)/2) - floor((m-3)/3).
LeaderResult primitive_delta(u64 q, unsigned m, unsigned i);
unsigned primitive_max_rank(unsigned m);

enum class BandClass { LeaderHalf, LeaderFull, NotLeader };
const char* band_class_name(BandClass c) noexcept;

// Leader status of a in [q^s + 1, q^(s+1)] modulo q^(2s) - 1, a != 0 mod q.
BandClass primitive_band_classify(u64 q, unsigned s, u64 a);

// Largest (rank 1) and second largest (rank 2) leaders modulo (q^(2s)-1)/(q+1).
Covered<LeaderResult> anti_delta(u64 q, unsigned s, unsigned rank);

struct IntervalVerdict {
    bool leader = false;
    u64 coset_size = 0;  // 2s when leader
};

// For s even >= 4 and ceil(q/2) q^(s-1) <= i < (q^(s+1)+1)/(q+1), i != 0 mod q.
IntervalVerdict anti_interval_is_leader(u64 q, unsigned s, u64 i);

struct DigitProfile {
    std::vector<u64> digits;  // a_0 .. a_{m-1}
    u64 t1 = 0, t2 = 0;       // q - 1 = m t1 + t2
    std::vector<u64> upsilon; // positions carrying the rounded-up digit when t2 != 0
    u64 sum = 0;              // sum over t of q^ceil(m t/(q-1) - 1)
};

DigitProfile proj_digit_profile(u64 q, unsigned m);
LeaderResult proj_delta1(u64 q, unsigned m);
Covered<LeaderResult> proj_delta2(u64 q, unsigned m);

// Necessary conditions for a leader modulo (q^m-1)/(q-1), q > 3: top digit
// zero, and non-increasing positive digits under an all-(q-1) prefix.
bool proj_leader_necessary(u64 q, unsigned m, u64 i);

}  // namespace bch_atlas
