#pragma once

#include <optional>
#include <vector>

#include "bch_atlas/codes.hpp"
#include "bch_atlas/cosets.hpp"
#include "bch_atlas/gf.hpp"

namespace bch_atlas {

struct ExhaustiveResult {
    u64 distance = 0;
    u64 codewords = 0;          // nonzero codewords visited
    std::vector<u64> support;   // first minimum-weight codeword met
};

// Walks every nonzero codeword m(x) g(x) with a p-ary Gray code over the
// GF(p)-basis, one basis addition per step. BudgetExceeded when q^k is over
// budgets.max_codewords; InvalidArgument for the zero code.
ExhaustiveResult exhaustive_min_distance(const BchCode& code, const FieldTower& tower, const Budgets& budgets = {});

struct LowWeightResult {
    std::optional<u64> weight;  // nullopt: no nonzero kernel vector of weight <= wmax
    std::vector<u64> support;   // lexicographically smallest, starts at 0
    std::vector<Code> coefficients;
    u64 budget_consumed = 0;    // index insertions plus probes
};

// Kernel of H with rows (beta^(r j))_j for r in rows, a cyclic code over
// GF(q). Every cyclic shift and scaling of a codeword is a codeword, so the
// search pins position 0 with coefficient 1 and looks up the last column of
// each candidate support in a sorted syndrome index.
// RedundancyTooLarge when the rows carry more than 64 scalar checks.
LowWeightResult low_weight_search(const std::vector<u64>& rows, const FieldTower& tower, u64 n, unsigned wmax,
                                  const Budgets& budgets = {});

// Largest d allowed by the Hamming bound, capped by the Singleton bound n - k + 1.
u64 sphere_packing_max_d(u64 n, u64 k, u64 q);

// delta when (q-1) | n, gcd(n, q) = 1 and delta = a * d_b with d_b | n/(q-1),
// 1 <= a <= q-1: the minimum distance of the narrow-sense code is then delta.
std::optional<u64> divisor_multiple_distance(u64 q, u64 n, u64 delta);

}  // namespace bch_atlas
