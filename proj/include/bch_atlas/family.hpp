#pragma once

#include <optional>
#include <string>

#include "bch_atlas/arith.hpp"
#include "bch_atlas/cosets.hpp"

namespace bch_atlas {

// Primitive: n = q^m - 1. AntiPrimitive: n = (q^(2s) - 1)/(q + 1), m = 2s.
// Projective: n = (q^m - 1)/(q - 1).
enum class Family { Primitive, AntiPrimitive, Projective };

const char* family_name(Family f) noexcept;
// Accepts primitive, anti, anti-primitive, projective, proj.
Family parse_family(const std::string& s);

struct FamilyParams {
    Family family = Family::Primitive;
    u64 q = 2;
    unsigned param = 1;  // m, or s for AntiPrimitive

    static FamilyParams make(Family family, u64 q, unsigned param);

    unsigned m() const { return family == Family::AntiPrimitive ? 2 * param : param; }
    std::optional<unsigned> s() const {
        if (family == Family::AntiPrimitive) return param;
        return std::nullopt;
    }
    u64 n() const;
    CosetContext context() const { return CosetContext::make(q, n()); }
};

}  // namespace bch_atlas
