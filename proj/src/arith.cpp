#include "bch_atlas/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bch_atlas/error.hpp"

namespace bch_atlas {

const char* kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::MixedFields: return "MixedFields";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ResidueOutOfRange: return "ResidueOutOfRange";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::WidthTooSmall: return "WidthTooSmall";
        case ErrorKind::WrongFamily: return "WrongFamily";
        case ErrorKind::RankOutOfRange: return "RankOutOfRange";
        case ErrorKind::OutOfBand: return "OutOfBand";
        case ErrorKind::WrongParity: return "WrongParity";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::IntegralityViolation: return "IntegralityViolation";
        case ErrorKind::DeltaOutOfRange: return "DeltaOutOfRange";
        case ErrorKind::RangeWraparound: return "RangeWraparound";
        case ErrorKind::RedundancyTooLarge: return "RedundancyTooLarge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

u64 mulmod(u64 a, u64 b, u64 mod) { return static_cast<u64>(static_cast<u128>(a) * b % mod); }

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these witnesses are enough below 2^64
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's variant; n is odd, composite, and has no tiny factors.
u64 rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        const u64 m = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::map<u64, unsigned> acc;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    split(n, acc);
    return {acc.begin(), acc.end()};
}

i128 ipow(i128 base, unsigned exp) {
    constexpr i128 limit = static_cast<i128>(1) << 125;
    i128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > limit || r < -limit) throw Error(ErrorKind::DegreeOverflow, "power exceeds 125 bits");
    }
    return r;
}

u64 upow(u64 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > UINT64_MAX) throw Error(ErrorKind::DegreeOverflow, "power exceeds 64 bits");
    }
    return static_cast<u64>(r);
}

i128 exact_div(i128 num, i128 den, const std::string& what) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, what);
    if (num % den != 0) {
        throw Error(ErrorKind::IntegralityViolation,
                    what + ": " + to_string(num) + " is not divisible by " + to_string(den));
    }
    return num / den;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

u64 to_u64(i128 v, const std::string& what) {
    if (v < 0 || v > static_cast<i128>(UINT64_MAX)) {
        throw Error(ErrorKind::DegreeOverflow, what + " does not fit in 64 bits");
    }
    return static_cast<u64>(v);
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace bch_atlas
