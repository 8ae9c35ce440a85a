#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bch_atlas {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 mod);
u64 powmod(u64 base, u64 exp, u64 mod);

// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

// Prime factorization, ascending primes with multiplicities.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

// Exact powers. The checked forms throw DegreeOverflow instead of wrapping.
i128 ipow(i128 base, unsigned exp);
u64 upow(u64 base, unsigned exp);

// num / den, throwing IntegralityViolation when den does not divide num.
i128 exact_div(i128 num, i128 den, const std::string& what);

i128 floor_div(i128 a, i128 b);
i128 ceil_div(i128 a, i128 b);

// Narrows to u64, throwing DegreeOverflow when out of range.
u64 to_u64(i128 v, const std::string& what);

std::string to_string(i128 v);

}  // namespace bch_atlas
