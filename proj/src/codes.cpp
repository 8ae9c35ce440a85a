#include "bch_atlas/codes.hpp"

#include <algorithm>

#include "bch_atlas/leaders.hpp"

namespace bch_atlas {

namespace {

std::vector<char> membership(const std::vector<u64>& residues, u64 n) {
    std::vector<char> in(n, 0);
    for (u64 r : residues) in[r] = 1;
    return in;
}

std::vector<u64> leaders_of(const CosetPartition& part, const std::vector<u64>& residues) {
    std::vector<u64> out;
    for (u64 r : residues) {
        if (part.leader(part.id_of(r)) == r) out.push_back(r);
    }
    return out;
}

bool is_primitive_length(const CosetContext& ctx) {
    return ipow(static_cast<i128>(ctx.q), static_cast<unsigned>(ctx.m)) == static_cast<i128>(ctx.n) + 1;
}

// Residues whose whole coset lies in the marked set of ids.
std::vector<u64> expand(const CosetPartition& part, const std::vector<char>& id_marked) {
    std::vector<u64> out;
    const u64 n = part.context().n;
    for (u64 r = 0; r < n; ++r) {
        if (id_marked[part.id_of(r)]) out.push_back(r);
    }
    return out;
}

// Length of the run of T-perp starting at `start` needed to touch every coset
// of T-perp, or 0 if the maximal run from `start` does not reach them all.
struct RunScan {
    u64 needed = 0;
    std::vector<char> seen;
};

RunScan scan_run(const CosetPartition& part, const std::vector<char>& in_perp, u64 start, u64 total_ids) {
    RunScan rs;
    rs.seen.assign(part.count(), 0);
    const u64 n = part.context().n;
    u64 hit = 0;
    for (u64 r = start; r < n && in_perp[r]; ++r) {
        const auto id = part.id_of(r);
        if (!rs.seen[id]) {
            rs.seen[id] = 1;
            if (++hit == total_ids) {
                rs.needed = r - start + 1;
                break;
            }
        }
    }
    return rs;
}

i128 P(u64 q, i128 e) { return ipow(static_cast<i128>(q), static_cast<unsigned>(e)); }

DimensionFormula checked(i128 k, i128 n, std::string id) {
    if (k < 0 || k > n) {
        throw Error(ErrorKind::IntegralityViolation, id + " gives k = " + to_string(k) + " outside [0, n]");
    }
    return {static_cast<u64>(k), std::move(id)};
}

void check_delta(u64 delta, u64 n) {
    if (delta < 2 || delta > n) {
        throw Error(ErrorKind::DeltaOutOfRange, "delta = " + std::to_string(delta) + " is outside [2, n]");
    }
}

i128 anti_n(u64 q, unsigned s) { return (P(q, 2 * s) - 1) / (static_cast<i128>(q) + 1); }

}  // namespace

// ---------------------------------------------------------------- defining sets

DefiningSet defining_set(const CosetPartition& part, u64 delta, u64 b) {
    const CosetContext& ctx = part.context();
    if (b == 0) throw Error(ErrorKind::InvalidArgument, "b must be positive; C_0 enters only through tilde codes");
    check_delta(delta, ctx.n);
    if (b + delta - 2 >= ctx.n) {
        throw Error(ErrorKind::RangeWraparound, "b + delta - 2 = " + std::to_string(b + delta - 2) + " reaches n");
    }
    std::vector<char> marked(part.count(), 0);
    for (u64 i = b; i <= b + delta - 2; ++i) marked[part.id_of(i)] = 1;
    DefiningSet T;
    T.context = ctx;
    T.b = b;
    T.delta = delta;
    T.residues = expand(part, marked);
    T.coset_leaders = leaders_of(part, T.residues);
    return T;
}

std::vector<u64> dimension_profile(const CosetPartition& part, u64 b, u64 delta_max) {
    const u64 n = part.context().n;
    if (b == 0) throw Error(ErrorKind::InvalidArgument, "b must be positive");
    if (delta_max < 2 || b + delta_max - 2 >= n) {
        throw Error(ErrorKind::RangeWraparound, "delta range reaches n");
    }
    std::vector<char> marked(part.count(), 0);
    std::vector<u64> dims;
    u64 k = n;
    for (u64 delta = 2; delta <= delta_max; ++delta) {
        const auto id = part.id_of(b + delta - 2);
        if (!marked[id]) {
            marked[id] = 1;
            k -= part.size(id);
        }
        dims.push_back(k);
    }
    return dims;
}

BchCode make_code(const CosetPartition& part, u64 delta, u64 b, std::optional<Family> family) {
    BchCode c;
    c.family = family;
    c.context = part.context();
    c.b = b;
    c.delta = delta;
    c.defining_set = defining_set(part, delta, b);
    c.dimension = c.context.n - c.defining_set.size();
    return c;
}

Poly generator_polynomial(const DefiningSet& T, const FieldTower& tower) {
    if (tower.sub->size() != T.context.q) throw Error(ErrorKind::LengthMismatch, "tower base field is not GF(q)");
    const u64 n = T.context.n;
    if (2 * T.size() <= n) {
        Poly g(tower.sub, {1});
        for (u64 leader : T.coset_leaders) g = poly_mul(g, minimal_polynomial(tower, n, leader));
        return g;
    }
    // large T: divide x^n - 1 by the check polynomial, which has degree k
    const auto in = membership(T.residues, n);
    Poly h(tower.sub, {1});
    for (u64 r = 0; r < n; ++r) {
        if (!in[r] && leader_of(T.context, r) == r) h = poly_mul(h, minimal_polynomial(tower, n, r));
    }
    return poly_divmod(Poly::x_pow_minus_one(tower.sub, n), h).quotient;
}

void attach_generator(BchCode& code, const FieldTower& tower) {
    code.generator = generator_polynomial(code.defining_set, tower);
}

std::vector<u64> dualize(const std::vector<u64>& residues, u64 n) {
    const auto in = membership(residues, n);
    std::vector<u64> out;
    for (u64 r = 0; r < n; ++r) {
        if (!in[(n - r) % n]) out.push_back(r);
    }
    return out;
}

std::vector<u64> dualize(const DefiningSet& T) { return dualize(T.residues, T.context.n); }

u64 bose_distance(const DefiningSet& T) {
    const auto in = membership(T.residues, T.context.n);
    u64 i = T.b;
    while (i < T.context.n && in[i]) ++i;
    return i - T.b + 1;
}

// ---------------------------------------------------------------- dually-BCH

DuallyBchVerdict is_dually_bch_direct(const CosetPartition& part, const DefiningSet& T) {
    const u64 n = part.context().n;
    const auto perp = dualize(T);
    DuallyBchVerdict v;
    if (perp.empty()) {
        v.verdict = true;
        v.zero_code = true;
        return v;
    }
    const auto in_perp = membership(perp, n);
    std::vector<char> ids(part.count(), 0);
    u64 total = 0;
    for (u64 r : perp) {
        const auto id = part.id_of(r);
        if (!ids[id]) ids[id] = 1, ++total;
    }
    // every candidate range sits inside one maximal run of T-perp
    std::optional<RunScan> first;
    for (u64 r = 0; r < n;) {
        if (!in_perp[r]) {
            ++r;
            continue;
        }
        RunScan rs = scan_run(part, in_perp, r, total);
        if (rs.needed) {
            v.verdict = true;
            v.b_prime = r;
            v.delta_prime = rs.needed + 1;
            return v;
        }
        if (!first) first = std::move(rs);
        while (r < n && in_perp[r]) ++r;
    }
    for (u64 r : perp) {
        if (!first->seen[part.id_of(r)]) {
            v.witness = r;
            break;
        }
    }
    return v;
}

Covered<ClosedVerdict> dually_bch_closed_form(Family family, u64 q, unsigned param, u64 delta, u64 b) {
    const FamilyParams fp = FamilyParams::make(family, q, param);
    const i128 n = fp.n(), d = delta, Q = q;
    if (b != 1 && b != 2) return Unsupported{"only b = 1 and b = 2 are characterized"};
    if (d < 2 || d > n - (b == 2 ? 1 : 0)) {
        throw Error(ErrorKind::DeltaOutOfRange, "delta = " + std::to_string(delta) + " is outside the code range");
    }
    auto res = [](bool v, const char* id) { return Covered<ClosedVerdict>(ClosedVerdict{v, id}); };
    switch (family) {
        case Family::Primitive: {
            const unsigned m = param;
            const i128 half = P(q, (m - 1) / 2);
            if (b == 1) {
                if (q == 2 && m >= 6) return res(d <= 3 || P(2, m - 1) - half <= d, "primitive.narrow.binary");
                if (q >= 3 && m >= 2) return res(d == 2 || (Q - 1) * P(q, m - 1) - half <= d, "primitive.narrow.nonbinary");
                return Unsupported{"binary primitive lengths need m >= 6"};
            }
            if (q >= 3 && m >= 2) return res((Q - 1) * P(q, m - 1) - half - 1 <= d, "primitive.shifted.nonbinary");
            if (q == 2 && m >= 6) return res(d == 2 || P(2, m - 1) - half - 1 <= d, "primitive.shifted.binary");
            return Unsupported{"binary primitive lengths need m >= 6"};
        }
        case Family::AntiPrimitive: {
            const unsigned s = param;
            const i128 d1 = anti_delta(q, s, 1)->value;
            if (b == 1) {
                if (q == 2) return res(d1 + 1 <= d, "anti.narrow.binary");
                if (s == 2) return res(d == 2 || d1 <= d, "anti.narrow.s2");
                return res(d1 + 1 <= d, "anti.narrow.nonbinary");
            }
            if (q >= 3 && s == 2) return res(d1 - 1 <= d, "anti.shifted.s2");
            if (q >= 3) return res(d1 <= d, "anti.shifted.nonbinary");
            if (s % 2 == 0) return res(d1 <= d, "anti.shifted.binary-even-s");
            return Unsupported{"binary anti-primitive lengths with odd s are not characterized for b = 2"};
        }
        case Family::Projective: {
            const unsigned m = param;
            if (q < 3 || m < 4) return Unsupported{"projective lengths need q >= 3 and m >= 4"};
            const i128 d1 = proj_delta1(q, m).value;
            if (b == 1) return res(d1 + 1 <= d, "projective.narrow");
            return res(d1 <= d, "projective.shifted");
        }
    }
    return Unsupported{"unknown family"};
}

// ---------------------------------------------------------------- tilde codes

DefiningSet tilde_defining_set(const CosetPartition& part, u64 delta) {
    if (!is_primitive_length(part.context())) throw Error(ErrorKind::WrongFamily, "tilde codes need n = q^m - 1");
    DefiningSet T = defining_set(part, delta, 1);
    if (T.residues.empty() || T.residues.front() != 0) {
        T.residues.insert(T.residues.begin(), 0);
        T.coset_leaders.insert(T.coset_leaders.begin(), 0);
    }
    T.includes_zero_coset = true;
    return T;
}

BchCode tilde_code(const CosetPartition& part, u64 delta) {
    BchCode c;
    c.family = Family::Primitive;
    c.context = part.context();
    c.b = 1;
    c.delta = delta;
    c.defining_set = tilde_defining_set(part, delta);
    c.dimension = c.context.n - c.defining_set.size();
    return c;
}

bool tilde_dual_narrow_sense_direct(const CosetPartition& part, u64 delta) {
    const u64 n = part.context().n;
    const DefiningSet T = tilde_defining_set(part, delta);
    const auto perp = dualize(T);
    if (perp.empty() || n < 2) return false;
    const auto in_perp = membership(perp, n);
    if (!in_perp[1]) return false;
    std::vector<char> ids(part.count(), 0);
    u64 total = 0;
    for (u64 r : perp) {
        const auto id = part.id_of(r);
        if (!ids[id]) ids[id] = 1, ++total;
    }
    return scan_run(part, in_perp, 1, total).needed > 0;
}

Covered<ClosedVerdict> tilde_dual_narrow_sense_closed(u64 q, unsigned m, u64 delta) {
    const i128 n = P(q, m) - 1, d = delta, Q = q;
    check_delta(delta, static_cast<u64>(n));
    const i128 top = (Q - 1) * P(q, m - 1);
    const i128 lo = top - P(q, (m - 1) / 2);
    if (q == 2 && m >= 6) return ClosedVerdict{d <= 3 || (lo <= d && d <= top - 1), "tilde.binary"};
    if (q >= 3 && m >= 2) return ClosedVerdict{d == 2 || (lo <= d && d <= top - 1), "tilde.nonbinary"};
    return Unsupported{"binary lengths need m >= 6"};
}

// ---------------------------------------------------------------- dimensions

Covered<DimensionFormula> anti_small_delta_dimension(u64 q, unsigned s, u64 delta) {
    const i128 n = anti_n(q, s), Q = q, d = delta;
    check_delta(delta, static_cast<u64>(n));
    const i128 S = s;
    const i128 base = n - 2 * S * (d - 1) + 2 * S * floor_div(d - 1, Q);
    const i128 qs = P(q, s);
    if (s % 2 == 1 && ((q >= 3 && s >= 3) || (q == 2 && s >= 5))) {
        const i128 A = (qs + 1) / (Q + 1);
        if (d <= A) return checked(base, n, "anti.small-delta.odd-s.first");
        if (d <= (Q - 1) * A + 1) {
            return checked(base + S * floor_div((d - 1) * (Q + 1), qs + 1), n, "anti.small-delta.odd-s.second");
        }
        if ((Q - 1) * A + 2 <= d && d <= (qs * Q - 1) / (Q + 1) + 2) {
            return checked(base + S * (Q - 1), n, "anti.small-delta.odd-s.third");
        }
        if ((Q - 1) * P(q, s - 1) + A + 1 <= d && d <= qs + 1) {
            return checked(base + 3 * S * (Q - 1), n, "anti.small-delta.odd-s.fourth");
        }
        return Unsupported{"delta falls between the covered odd-s ranges"};
    }
    if (s % 2 == 0 && s >= 4) {
        if (d > ((Q + 1) / 2) * P(q, s - 1) + 1) return Unsupported{"delta above the small-delta range"};
        if (q % 2 == 0) return checked(base, n, "anti.small-delta.even-s.q-even");
        if (d <= (qs + 1) / 2) return checked(base, n, "anti.small-delta.even-s.q-odd.lower");
        return checked(base + S, n, "anti.small-delta.even-s.q-odd.upper");
    }
    return Unsupported{"needs odd s >= 3 (s >= 5 for q = 2) or even s >= 4"};
}

Covered<DimensionFormula> anti_mid_delta_dimension(u64 q, unsigned s, u64 delta) {
    const i128 n = anti_n(q, s), Q = q, d = delta, S = s;
    check_delta(delta, static_cast<u64>(n));
    if (s % 2 == 1 || s < 4) return Unsupported{"needs even s >= 4"};
    const i128 qs = P(q, s);
    if (d < ((Q + 1) / 2) * P(q, s - 1) + 1 || d * (Q + 1) > qs * Q + 1) return Unsupported{"delta outside the mid range"};
    const i128 band = floor_div((d - 1) * (Q + 1), qs);
    const i128 tail = 2 * S * floor_div(d - 1, Q);
    if (q % 2 == 0) return checked(n - 2 * S * (d + (Q - 2) / 2 - band) + tail, n, "anti.mid-delta.q-even");
    return checked(n - 2 * S * (d + (Q - 1) / 2 - band) + tail + S, n, "anti.mid-delta.q-odd");
}

Covered<DimensionFormula> anti_special_delta_dimension(u64 q, unsigned s, u64 delta) {
    const i128 n = anti_n(q, s), Q = q, d = delta, S = s;
    check_delta(delta, static_cast<u64>(n));
    const i128 qs = P(q, s);
    const i128 base = n - 2 * S * (d - 1) + 2 * S * floor_div(d - 1, Q);
    struct Hit {
        i128 a;
        DimensionFormula f;
    };
    std::vector<Hit> hits;
    if (s % 2 == 1 && s >= 3 && (q != 2 || s >= 5)) {
        const i128 minus = (qs - 1) / (Q - 1), plus = (qs + 1) / (Q + 1);
        for (i128 a = 1; a <= Q - 1; ++a) {
            if (d == a * minus) {
                if (a <= Q - 3) {
                    hits.push_back({a, checked(base + S * floor_div((d - 1) * (Q + 1), qs + 1), n,
                                               "anti.special.qs-minus-1.small-a")});
                } else if (a == Q - 2) {
                    hits.push_back({a, checked(base + S * (Q + 1), n, "anti.special.qs-minus-1.a-q-minus-2")});
                } else {
                    hits.push_back({a, checked(n - S * ((Q - 1) * (2 * P(q, s - 1) - 3) - 2), n,
                                               "anti.special.qs-minus-1.a-q-minus-1")});
                }
            }
            if (d == a * plus) {
                if (a == 1) {
                    hits.push_back({a, checked(base, n, "anti.special.qs-plus-1.a-1")});
                } else {
                    hits.push_back({a, checked(n - S * (2 * d - a - 1) + 2 * S * floor_div(d - 1, Q), n,
                                               "anti.special.qs-plus-1.larger-a")});
                }
            }
        }
    } else if (s % 2 == 0 && s >= 4) {
        const i128 unit = (qs - 1) / (Q * Q - 1);
        for (i128 a = 1; a <= Q - 1; ++a) {
            if (d == a * unit) hits.push_back({a, checked(base, n, "anti.special.even-s")});
        }
    }
    if (hits.empty()) return Unsupported{"delta is not one of the special designed distances"};
    std::stable_sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.a < y.a; });
    for (const Hit& h : hits) {
        if (h.f.k != hits.front().f.k) {
            throw Error(ErrorKind::IntegralityViolation,
                        "delta matches two special shapes with different dimensions (" + hits.front().f.formula_id +
                            " vs " + h.f.formula_id + ")");
        }
    }
    return hits.front().f;
}

Covered<DimensionFormula> top_band_dimension(Family family, u64 q, unsigned param, u64 delta) {
    const FamilyParams fp = FamilyParams::make(family, q, param);
    check_delta(delta, fp.n());
    if (family == Family::AntiPrimitive) {
        const unsigned s = param;
        std::optional<Covered<LeaderResult>> second;
        try {
            second = anti_delta(q, s, 2);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::IntegralityViolation) throw;
            return Unsupported{std::string("second leader formula is not integral: ") + e.what()};
        }
        if (!second->covered()) return second->gap();
        const u64 d1 = anti_delta(q, s, 1)->value, d2 = second->value().value;
        const u64 band = s % 2 ? s + 1 : 2 * s + 1;
        const u64 at2 = s % 2 ? 3 * s + 1 : 4 * s + 1;
        if (d2 < delta && delta <= d1) return DimensionFormula{band, "anti.top-band"};
        if (delta == d2) return DimensionFormula{at2, "anti.second-leader"};
        return Unsupported{"delta outside [delta_2, delta_1]"};
    }
    if (family == Family::Projective) {
        const unsigned m = param;
        if (q <= 3 || m < 4) return Unsupported{"needs q > 3 and m >= 4"};
        const auto second = proj_delta2(q, m);
        if (!second.covered()) return second.gap();
        const LeaderResult first = proj_delta1(q, m);
        const u64 band = first.coset_size + 1;
        if (second->value < delta && delta <= first.value) return DimensionFormula{band, "projective.top-band"};
        if (delta == second->value) return DimensionFormula{band + m, "projective.second-leader"};
        return Unsupported{"delta outside [delta_2, delta_1]"};
    }
    return Unsupported{"no band formula for primitive lengths"};
}

Covered<DimensionFormula> primitive_leader_dimension(u64 q, unsigned m, u64 delta) {
    const FamilyParams fp = FamilyParams::make(Family::Primitive, q, m);
    check_delta(delta, fp.n());
    if (m < 2) return Unsupported{"needs m >= 2"};
    const unsigned top = primitive_max_rank(m);
    for (unsigned i = 3; i <= top; ++i) {
        if (primitive_delta(q, m, i).value == delta) {
            const u64 k = m % 2 ? static_cast<u64>(i) * m : static_cast<u64>(2 * i - 1) * m / 2;
            return DimensionFormula{k, "primitive.ith-leader"};
        }
    }
    return Unsupported{"delta is not the i-th largest leader for 3 <= i <= " + std::to_string(top)};
}

std::vector<DimensionFormula> dimension_formulas(Family family, u64 q, unsigned param, u64 delta) {
    const FamilyParams fp = FamilyParams::make(family, q, param);
    check_delta(delta, fp.n());
    std::vector<DimensionFormula> out;
    auto take = [&](const Covered<DimensionFormula>& c) {
        if (c.covered()) out.push_back(c.value());
    };
    if (family == Family::AntiPrimitive) {
        take(anti_small_delta_dimension(q, param, delta));
        take(anti_mid_delta_dimension(q, param, delta));
        take(anti_special_delta_dimension(q, param, delta));
        take(top_band_dimension(family, q, param, delta));
    } else if (family == Family::Projective) {
        take(top_band_dimension(family, q, param, delta));
    } else {
        take(primitive_leader_dimension(q, param, delta));
    }
    return out;
}

Covered<DimensionFormula> dimension_closed_form(Family family, u64 q, unsigned param, u64 delta) {
    auto all = dimension_formulas(family, q, param, delta);
    if (all.empty()) return Unsupported{"no closed form covers this designed distance"};
    return all.front();
}

}  // namespace bch_atlas
