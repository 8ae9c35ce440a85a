#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bch_atlas/arith.hpp"

namespace bch_atlas {

// Guardrails for the brute-force oracles. Defaults keep everything desk-scale.
struct Budgets {
    u64 max_enum = 1'000'000'000;        // n * m steps for coset sweeps
    u64 max_codewords = u64{1} << 24;    // exhaustive distance
    u64 max_syndromes = u64{1} << 26;    // low-weight search insertions + probes

    // Defaults, with BCH_ATLAS_MAX_ENUM applied when set.
    static Budgets from_environment();
};

struct CosetContext {
    u64 q = 0;
    u64 n = 0;
    u64 m = 0;  // ord_n(q)

    // NotCoprime when gcd(q, n) != 1.
    static CosetContext make(u64 q, u64 n);
};

// Smallest m >= 1 with q^m = 1 mod n.
u64 mult_order(u64 q, u64 n);

struct CyclotomicCoset {
    u64 leader = 0;
    std::vector<u64> elements;  // ascending
    u64 size() const { return elements.size(); }
};

CyclotomicCoset coset_of(const CosetContext& ctx, u64 t);
u64 leader_of(const CosetContext& ctx, u64 t);
u64 coset_size(const CosetContext& ctx, u64 t);
// [t q^j]_n
u64 rotate_residue(const CosetContext& ctx, u64 t, u64 j);

// Exactly `width` base-q digits, most significant first. WidthTooSmall if t >= q^width.
std::vector<unsigned> q_digits(u64 t, u64 q, unsigned width);
u64 from_q_digits(const std::vector<unsigned>& digits, u64 q);

struct LeaderEntry {
    u64 leader = 0;
    u64 size = 0;
    bool operator==(const LeaderEntry&) const = default;
};

// The k largest coset leaders, descending. Each is checked against all its
// rotations directly, so this is independent of every closed form.
std::vector<LeaderEntry> k_largest_leaders(const CosetContext& ctx, u64 k, const Budgets& budgets = {});

// Full partition of Z_n into cosets, built by a mark-visited sweep.
class CosetPartition {
public:
    explicit CosetPartition(const CosetContext& ctx, const Budgets& budgets = {});

    const CosetContext& context() const { return ctx_; }
    std::uint32_t id_of(u64 r) const { return id_[r]; }
    u64 leader(std::uint32_t id) const { return leaders_[id].leader; }
    u64 size(std::uint32_t id) const { return leaders_[id].size; }
    std::size_t count() const { return leaders_.size(); }
    // Ascending by leader; ids are positions in this list.
    const std::vector<LeaderEntry>& leaders() const { return leaders_; }

private:
    CosetContext ctx_;
    std::vector<std::uint32_t> id_;
    std::vector<LeaderEntry> leaders_;
};

// Digits (0, q-1 repeated runs[q-1] times, ..., 1 repeated runs[1] times).
// runs[0] is unused and stays 0.
struct RunLengthForm {
    std::vector<u64> runs;
    unsigned width = 0;

    std::vector<unsigned> digits() const;
};

// nullopt when t's digits are not a leading zero followed by non-increasing
// nonzero runs. WrongFamily unless n = (q^m-1)/(q-1).
std::optional<RunLengthForm> run_length_form(const CosetContext& ctx, u64 t);

}  // namespace bch_atlas
