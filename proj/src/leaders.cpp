#include "bch_atlas/leaders.hpp"

#include <numeric>

#include "bch_atlas/cosets.hpp"

namespace bch_atlas {

namespace {

i128 P(u64 q, i128 e) {
    if (e < 0) throw Error(ErrorKind::IntegralityViolation, "negative exponent");
    return ipow(static_cast<i128>(q), static_cast<unsigned>(e));
}

LeaderResult make(i128 value, u64 size, unsigned rank, std::string provenance) {
    if (value < 0) throw Error(ErrorKind::IntegralityViolation, provenance + " evaluates negative");
    return {to_u64(value, provenance), size, rank, std::move(provenance)};
}

void need_q(u64 q) {
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
}

}  // namespace

// ---------------------------------------------------------------- primitive

unsigned primitive_max_rank(unsigned m) {
    const i128 M = m;
    const i128 bound = M - (floor_div(M - 1, 2) + floor_div(M - 3, 3));
    return static_cast<unsigned>(std::max<i128>(2, bound));
}

LeaderResult primitive_delta(u64 q, unsigned m, unsigned i) {
    need_q(q);
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "m must be at least 2");
    if (i == 0 || i > primitive_max_rank(m)) {
        throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(i) + " is outside 1.." +
                                                   std::to_string(primitive_max_rank(m)) + " for m = " +
                                                   std::to_string(m));
    }
    const i128 top = (static_cast<i128>(q) - 1) * P(q, m - 1) - 1;
    if (i == 1) return make(top, m, 1, "primitive.largest");
    const i128 v = top - P(q, (m - 1) / 2 + i - 2);
    // the second leader has period m/2 when m is even
    const u64 size = (i == 2 && m % 2 == 0) ? m / 2 : m;
    return make(v, size, i, i == 2 ? "primitive.second" : "primitive.ith-largest");
}

const char* band_class_name(BandClass c) noexcept {
    switch (c) {
        case BandClass::LeaderHalf: return "leader-half";
        case BandClass::LeaderFull: return "leader-full";
        case BandClass::NotLeader: return "not-leader";
    }
    return "unknown";
}

BandClass primitive_band_classify(u64 q, unsigned s, u64 a) {
    need_q(q);
    const i128 qs = P(q, s);
    if (a < qs + 1 || a > qs * q || a % q == 0) {
        throw Error(ErrorKind::OutOfBand, std::to_string(a) + " is outside [q^s+1, q^(s+1)] or divisible by q");
    }
    const i128 A = a;
    if (A % (qs + 1) == 0 && A / (qs + 1) <= static_cast<i128>(q) - 1) return BandClass::LeaderHalf;
    const i128 hi = A / qs, lo = A % qs;
    if (lo >= 1 && lo < hi && hi <= static_cast<i128>(q) - 1) return BandClass::NotLeader;
    return BandClass::LeaderFull;
}

// ---------------------------------------------------------------- anti-primitive

Covered<LeaderResult> anti_delta(u64 q, unsigned s, unsigned rank) {
    need_q(q);
    if (rank != 1 && rank != 2) throw Error(ErrorKind::RankOutOfRange, "rank must be 1 or 2");
    if (s < 2) return Unsupported{"s must be at least 2"};
    const unsigned m = 2 * s;
    const i128 Q = q;
    const i128 lead = (Q - 1) * P(q, m - 1);
    if (rank == 1) {
        if (s % 2 == 1) {
            return make(exact_div(lead - P(q, (m - 2) / 2) - 1, Q + 1, "largest leader, odd s"), s, 1,
                        "anti.largest.odd-s");
        }
        return make(exact_div(lead - P(q, m / 2) - 1, Q + 1, "largest leader, even s"), m, 1,
                    "anti.largest.even-s");
    }
    if (s % 2 == 1 && s > 4) {
        return make(exact_div(lead - P(q, s + 1) - 1, Q + 1, "second leader, odd s"), m, 2, "anti.second.odd-s");
    }
    if (s % 2 == 0 && s > 6) {
        return make(exact_div(lead - P(q, s + 2) - 1, Q + 1, "second leader, even s"), m, 2, "anti.second.even-s");
    }
    if (q % 2 == 1 && (s == 3 || s == 4 || s == 6)) {
        const unsigned e = s == 3 ? 4 : (s == 4 ? 6 : 7);
        return make(exact_div(lead - P(q, e) - 1, Q + 1, "second leader, s = " + std::to_string(s)), m, 2,
                    "anti.second.small-s");
    }
    if (s == 2) return Unsupported{"no closed form for the second leader when s = 2"};
    return Unsupported{"the closed form for s in {3, 4, 6} covers odd q only"};
}

IntervalVerdict anti_interval_is_leader(u64 q, unsigned s, u64 i) {
    need_q(q);
    if (s % 2 == 1) throw Error(ErrorKind::WrongParity, "s must be even");
    if (s < 4) throw Error(ErrorKind::OutOfBand, "s must be at least 4");
    const i128 Q = q, I = i;
    const i128 lo = ((Q + 1) / 2) * P(q, s - 1);
    if (I < lo || I * (Q + 1) >= P(q, s + 1) + 1 || I % Q == 0) {
        throw Error(ErrorKind::OutOfBand, std::to_string(i) + " is outside the interval or divisible by q");
    }
    const i128 tmax = q % 2 == 0 ? (Q - 2) / 2 : (Q - 3) / 2;
    for (i128 t = 1; t <= tmax; ++t) {
        const i128 num = (Q - t) * P(q, s) + t + 1;
        if (num % (Q + 1) == 0 && num / (Q + 1) == I) return {false, 0};
    }
    return {true, 2ull * s};
}

// ---------------------------------------------------------------- projective

DigitProfile proj_digit_profile(u64 q, unsigned m) {
    if (q < 3 || m < 4) throw Error(ErrorKind::InvalidArgument, "needs q >= 3 and m >= 4");
    DigitProfile d;
    d.digits.assign(m, 0);
    const i128 Q1 = static_cast<i128>(q) - 1;
    i128 sum = 0;
    for (i128 t = 1; t <= Q1; ++t) {
        const i128 e = ceil_div(static_cast<i128>(m) * t - Q1, Q1);
        ++d.digits[static_cast<std::size_t>(e)];
        sum += P(q, e);
    }
    d.sum = to_u64(sum, "digit profile sum");
    d.t1 = (q - 1) / m;
    d.t2 = (q - 1) % m;
    for (u64 g = 1; g <= d.t2; ++g) {
        d.upsilon.push_back(static_cast<u64>(ceil_div(static_cast<i128>(m) * g - d.t2, d.t2)));
    }
    return d;
}

LeaderResult proj_delta1(u64 q, unsigned m) {
    const DigitProfile d = proj_digit_profile(q, m);
    const i128 v = exact_div(P(q, m) - 1 - d.sum, static_cast<i128>(q) - 1, "largest projective leader");
    return make(v, m / std::gcd<u64>(m, q - 1), 1, "projective.largest");
}

Covered<LeaderResult> proj_delta2(u64 q, unsigned m) {
    if (q <= 3) return Unsupported{"second projective leader needs q > 3"};
    if (m < q) return Unsupported{"second projective leader needs m >= q"};
    const i128 Q = q;
    const i128 a = (m - 1) / (q - 1);
    const u64 b = (m - 1) % (q - 1);
    const i128 head = P(q, m) - 1 - P(q, m - 1);
    auto sum = [&](i128 from, i128 to, auto expo) {
        i128 acc = 0;
        for (i128 l = from; l <= to; ++l) acc += P(q, expo(l));
        return acc;
    };
    auto second = [&](i128 v, const std::string& tag) { return make(v, m, 2, "projective.second." + tag); };

    if (b == 0) {
        if (a < 3) return Unsupported{"m - 1 = a(q - 1) with a < 3 is not covered"};
        const i128 num = head - P(q, m - a) - sum(1, Q - 3, [&](i128 l) { return a * l - 1; });
        return second(exact_div(num, Q - 1, "second projective leader"), "residue-0");
    }
    if (b == 1) {
        const i128 A = (Q - 1) / 2;
        const i128 num = head - sum(1, A - 1, [&](i128 l) { return a * l; }) -
                         sum(A, Q - 2, [&](i128 l) { return a * l + 1; });
        return second(exact_div(num, Q - 1, "second projective leader"), "residue-1");
    }
    const i128 d1 = proj_delta1(q, m).value;
    if (b == 2) {
        const i128 A = (Q - 1) / 3;
        i128 v;
        if (q % 3 == 0) v = d1 - P(q, (2 * A + 1) * a + 1) + P(q, (A + 1) * a);
        else if (q % 3 == 1) v = d1 - P(q, 2 * A * a + 1);
        else v = d1 - P(q, A * a);
        return second(v, "residue-2");
    }
    if (b == q - 4) return second(d1 - P(q, (Q / 2) * (a + 1) - 2), "residue-q-4");
    if (b == q - 3) return second(d1 - P(q, a), "residue-q-3");
    if (b == q - 2) {
        const i128 num = head - P(q, m - 1 - a) - sum(1, Q - 3, [&](i128 l) { return (a + 1) * l - 1; });
        return second(exact_div(num, Q - 1, "second projective leader"), "residue-q-2");
    }
    return Unsupported{"(m - 1) mod (q - 1) = " + std::to_string(b) + " is not covered"};
}

bool proj_leader_necessary(u64 q, unsigned m, u64 i) {
    if (q <= 3) throw Error(ErrorKind::InvalidArgument, "needs q > 3");
    const u64 n = to_u64((P(q, m) - 1) / (static_cast<i128>(q) - 1), "n");
    if (i == 0 || i >= n) throw Error(ErrorKind::ResidueOutOfRange, "needs 1 <= i < n");
    const auto d = q_digits(i, q, m);
    auto digit = [&](unsigned l) { return d[m - 1 - l]; };  // i_l
    if (digit(m - 1) != 0) return false;
    if (m - 1 < q - 1) return true;  // a = 0: only the top-digit condition applies
    const unsigned a = (m - 1) / (q - 1), b = (m - 1) % (q - 1);
    const unsigned eps = b == q - 2 ? a + 1 : a;
    for (unsigned l = m - 1 - eps; l <= m - 2; ++l) {
        if (digit(l) != q - 1) return true;
    }
    for (unsigned l = 1; l <= m - 2; ++l) {
        if (digit(l - 1) < 1 || digit(l - 1) > digit(l)) return false;
    }
    return true;
}

}  // namespace bch_atlas
