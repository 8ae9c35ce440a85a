#include "bch_atlas/cosets.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "bch_atlas/error.hpp"

namespace bch_atlas {

Budgets Budgets::from_environment() {
    Budgets b;
    if (const char* v = std::getenv("BCH_ATLAS_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long x = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && x > 0) b.max_enum = x;
    }
    return b;
}

u64 mult_order(u64 q, u64 n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    if (std::gcd(q, n) != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(q) + ", " + std::to_string(n) + ") != 1");
    }
    if (n == 1) return 1;
    u64 x = q % n, m = 1;
    while (x != 1) {
        x = mulmod(x, q, n);
        ++m;
    }
    return m;
}

CosetContext CosetContext::make(u64 q, u64 n) {
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
    return {q, n, mult_order(q, n)};
}

namespace {

void check_residue(const CosetContext& ctx, u64 t) {
    if (t >= ctx.n) {
        throw Error(ErrorKind::ResidueOutOfRange, std::to_string(t) + " is not below n = " + std::to_string(ctx.n));
    }
}

void check_enum_budget(const CosetContext& ctx, const Budgets& budgets) {
    const u128 steps = static_cast<u128>(ctx.n) * ctx.m;
    if (steps > budgets.max_enum) {
        throw Error(ErrorKind::BudgetExceeded, "n*m = " + to_string(static_cast<i128>(steps)) +
                                                   " exceeds the enumeration budget " +
                                                   std::to_string(budgets.max_enum));
    }
}

}  // namespace

CyclotomicCoset coset_of(const CosetContext& ctx, u64 t) {
    check_residue(ctx, t);
    CyclotomicCoset c;
    u64 x = t;
    do {
        c.elements.push_back(x);
        x = mulmod(x, ctx.q, ctx.n);
    } while (x != t);
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    return c;
}

u64 leader_of(const CosetContext& ctx, u64 t) {
    check_residue(ctx, t);
    u64 best = t, x = mulmod(t, ctx.q, ctx.n);
    while (x != t) {
        best = std::min(best, x);
        x = mulmod(x, ctx.q, ctx.n);
    }
    return best;
}

u64 coset_size(const CosetContext& ctx, u64 t) {
    check_residue(ctx, t);
    u64 s = 1, x = mulmod(t, ctx.q, ctx.n);
    while (x != t) {
        ++s;
        x = mulmod(x, ctx.q, ctx.n);
    }
    return s;
}

u64 rotate_residue(const CosetContext& ctx, u64 t, u64 j) {
    check_residue(ctx, t);
    return mulmod(t, powmod(ctx.q, j, ctx.n), ctx.n);
}

std::vector<unsigned> q_digits(u64 t, u64 q, unsigned width) {
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
    std::vector<unsigned> d(width, 0);
    for (unsigned i = width; i-- > 0;) {
        d[i] = static_cast<unsigned>(t % q);
        t /= q;
    }
    if (t != 0) throw Error(ErrorKind::WidthTooSmall, "value needs more than " + std::to_string(width) + " digits");
    return d;
}

u64 from_q_digits(const std::vector<unsigned>& digits, u64 q) {
    u128 v = 0;
    for (unsigned d : digits) {
        v = v * q + d;
        if (v > UINT64_MAX) throw Error(ErrorKind::DegreeOverflow, "digit value exceeds 64 bits");
    }
    return static_cast<u64>(v);
}

std::vector<LeaderEntry> k_largest_leaders(const CosetContext& ctx, u64 k, const Budgets& budgets) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
    check_enum_budget(ctx, budgets);
    std::vector<LeaderEntry> out;
    for (u64 t = ctx.n; t-- > 0 && out.size() < k;) {
        // t is a leader iff no rotation undercuts it
        u64 x = mulmod(t, ctx.q, ctx.n), size = 1;
        bool leader = true;
        while (x != t) {
            if (x < t) {
                leader = false;
                break;
            }
            x = mulmod(x, ctx.q, ctx.n);
            ++size;
        }
        if (leader) out.push_back({t, size});
    }
    return out;
}

CosetPartition::CosetPartition(const CosetContext& ctx, const Budgets& budgets) : ctx_(ctx) {
    check_enum_budget(ctx, budgets);
    if (ctx.n > UINT32_MAX) throw Error(ErrorKind::BudgetExceeded, "n too large for a partition table");
    constexpr std::uint32_t unvisited = UINT32_MAX;
    id_.assign(ctx.n, unvisited);
    for (u64 t = 0; t < ctx.n; ++t) {
        if (id_[t] != unvisited) continue;
        const auto id = static_cast<std::uint32_t>(leaders_.size());
        u64 x = t, size = 0;
        do {
            id_[x] = id;
            ++size;
            x = mulmod(x, ctx.q, ctx.n);
        } while (x != t);
        leaders_.push_back({t, size});
    }
}

std::vector<unsigned> RunLengthForm::digits() const {
    std::vector<unsigned> d;
    for (std::size_t v = runs.size(); v-- > 1;) d.insert(d.end(), runs[v], static_cast<unsigned>(v));
    std::vector<unsigned> out(width - d.size(), 0);
    out.insert(out.end(), d.begin(), d.end());
    return out;
}

std::optional<RunLengthForm> run_length_form(const CosetContext& ctx, u64 t) {
    check_residue(ctx, t);
    const u64 q = ctx.q;
    const unsigned m = static_cast<unsigned>(ctx.m);
    if (q < 3 || (upow(q, m) - 1) / (q - 1) != ctx.n) {
        throw Error(ErrorKind::WrongFamily, "run-length forms need n = (q^m-1)/(q-1)");
    }
    auto d = q_digits(t, q, m);
    if (d[0] != 0) return std::nullopt;
    RunLengthForm f;
    f.runs.assign(q, 0);
    f.width = m;
    std::size_t i = 0;
    while (i < d.size() && d[i] == 0) ++i;
    unsigned prev = static_cast<unsigned>(q);
    for (; i < d.size(); ++i) {
        if (d[i] == 0 || d[i] > prev) return std::nullopt;
        ++f.runs[d[i]];
        prev = d[i];
    }
    return f;
}

}  // namespace bch_atlas
