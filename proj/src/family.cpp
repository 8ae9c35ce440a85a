#include "bch_atlas/family.hpp"

#include "bch_atlas/error.hpp"
#include "bch_atlas/gf.hpp"

namespace bch_atlas {

const char* family_name(Family f) noexcept {
    switch (f) {
        case Family::Primitive: return "primitive";
        case Family::AntiPrimitive: return "anti";
        case Family::Projective: return "projective";
    }
    return "unknown";
}

Family parse_family(const std::string& s) {
    if (s == "primitive" || s == "prim") return Family::Primitive;
    if (s == "anti" || s == "anti-primitive" || s == "antiprimitive") return Family::AntiPrimitive;
    if (s == "projective" || s == "proj") return Family::Projective;
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + s + "'");
}

FamilyParams FamilyParams::make(Family family, u64 q, unsigned param) {
    prime_power(q);
    if (param == 0) throw Error(ErrorKind::InvalidArgument, "m or s must be positive");
    if (family == Family::AntiPrimitive && param < 2) {
        throw Error(ErrorKind::InvalidArgument, "the anti-primitive family needs s >= 2");
    }
    FamilyParams fp{family, q, param};
    const i128 qm = ipow(q, fp.m());
    if (qm > (static_cast<i128>(1) << 63)) throw Error(ErrorKind::DegreeOverflow, "q^m exceeds 2^63");
    return fp;
}

u64 FamilyParams::n() const {
    const i128 qm = ipow(q, m());
    switch (family) {
        case Family::Primitive: return to_u64(qm - 1, "n");
        case Family::AntiPrimitive: return to_u64(exact_div(qm - 1, q + 1, "anti-primitive length"), "n");
        case Family::Projective: return to_u64(exact_div(qm - 1, q - 1, "projective length"), "n");
    }
    return 0;
}

}  // namespace bch_atlas
