#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bch_atlas/cosets.hpp"
#include "bch_atlas/error.hpp"
#include "bch_atlas/family.hpp"
#include "bch_atlas/gf.hpp"

namespace bch_atlas {

struct DefiningSet {
    CosetContext context;
    u64 b = 1;
    u64 delta = 2;
    std::vector<u64> residues;       // ascending, closed under r -> rq mod n
    std::vector<u64> coset_leaders;  // ascending
    bool includes_zero_coset = false;  // set for tilde codes

    u64 size() const { return residues.size(); }
};

// Union of C_b .. C_(b+delta-2). DeltaOutOfRange unless 2 <= delta <= n,
// RangeWraparound when b + delta - 2 >= n, InvalidArgument for b = 0.
DefiningSet defining_set(const CosetPartition& part, u64 delta, u64 b);

// n - |T| for every delta in [2, delta_max] at once; entry i is delta = i + 2.
std::vector<u64> dimension_profile(const CosetPartition& part, u64 b, u64 delta_max);

struct BchCode {
    std::optional<Family> family;
    CosetContext context;
    u64 b = 1;
    u64 delta = 2;
    DefiningSet defining_set;
    u64 dimension = 0;
    std::optional<Poly> generator;
};

BchCode make_code(const CosetPartition& part, u64 delta, u64 b, std::optional<Family> family = std::nullopt);

// Product of the minimal polynomials of the leaders in T, over GF(q).
Poly generator_polynomial(const DefiningSet& T, const FieldTower& tower);
void attach_generator(BchCode& code, const FieldTower& tower);

// { r : -r mod n not in T }, ascending.
std::vector<u64> dualize(const DefiningSet& T);
std::vector<u64> dualize(const std::vector<u64>& residues, u64 n);

// Largest d with b, b+1, ..., b+d-2 all in T.
u64 bose_distance(const DefiningSet& T);

struct DuallyBchVerdict {
    bool verdict = false;
    bool zero_code = false;  // T-perp empty, dual is {0}
    // when verdict and not zero_code: T-perp = C_b' u ... u C_(b'+delta'-2), delta' minimal
    std::optional<u64> b_prime;
    std::optional<u64> delta_prime;
    // when not verdict: smallest residue of T-perp missed by the run starting at min(T-perp)
    std::optional<u64> witness;
};

// Exhaustive over all non-wrapping consecutive ranges.
DuallyBchVerdict is_dually_bch_direct(const CosetPartition& part, const DefiningSet& T);

struct ClosedVerdict {
    bool value = false;
    std::string formula_id;
};

// Known characterizations for b in {1, 2}; Unsupported elsewhere.
Covered<ClosedVerdict> dually_bch_closed_form(Family family, u64 q, unsigned param, u64 delta, u64 b);

// T u C_0 for a primitive length with b = 1. WrongFamily otherwise.
DefiningSet tilde_defining_set(const CosetPartition& part, u64 delta);
BchCode tilde_code(const CosetPartition& part, u64 delta);

// Whether the dual of the tilde code is narrow-sense BCH, i.e. its defining
// set is C_1 u ... u C_(r-1) for some r >= 2.
bool tilde_dual_narrow_sense_direct(const CosetPartition& part, u64 delta);
Covered<ClosedVerdict> tilde_dual_narrow_sense_closed(u64 q, unsigned m, u64 delta);

struct DimensionFormula {
    u64 k = 0;
    std::string formula_id;
};

// Individual closed forms for narrow-sense codes. Each returns Unsupported
// outside its own range, so the verification suites can test them one by one.
Covered<DimensionFormula> anti_small_delta_dimension(u64 q, unsigned s, u64 delta);
Covered<DimensionFormula> anti_mid_delta_dimension(u64 q, unsigned s, u64 delta);
Covered<DimensionFormula> anti_special_delta_dimension(u64 q, unsigned s, u64 delta);
Covered<DimensionFormula> top_band_dimension(Family family, u64 q, unsigned param, u64 delta);
Covered<DimensionFormula> primitive_leader_dimension(u64 q, unsigned m, u64 delta);

// Every formula that speaks about (family, q, param, delta), in priority order.
std::vector<DimensionFormula> dimension_formulas(Family family, u64 q, unsigned param, u64 delta);
// The first of dimension_formulas, or Unsupported.
Covered<DimensionFormula> dimension_closed_form(Family family, u64 q, unsigned param, u64 delta);

}  // namespace bch_atlas
