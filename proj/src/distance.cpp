#include "bch_atlas/distance.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace bch_atlas {

// ---------------------------------------------------------------- exhaustive

namespace {

struct Entry {
    std::size_t pos;
    Code val;
};

void over_budget(const std::string& what, u64 budget) {
    throw Error(ErrorKind::BudgetExceeded, what + " exceeds the budget " + std::to_string(budget));
}

std::vector<u64> support_of(const std::vector<Code>& cw) {
    std::vector<u64> s;
    for (std::size_t i = 0; i < cw.size(); ++i) {
        if (cw[i]) s.push_back(i);
    }
    return s;
}

ExhaustiveResult binary_walk(const std::vector<std::vector<Entry>>& basis, u64 n, u64 steps) {
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> masks;
    for (const auto& b : basis) {
        std::vector<std::uint64_t> m(words, 0);
        for (const Entry& e : b) m[e.pos / 64] |= std::uint64_t{1} << (e.pos % 64);
        masks.push_back(std::move(m));
    }
    std::vector<std::uint64_t> cw(words, 0);
    ExhaustiveResult r;
    r.distance = n + 1;
    for (u64 t = 1; t <= steps; ++t) {
        const auto& m = masks[std::countr_zero(t)];
        u64 w = 0;
        for (std::size_t i = 0; i < words; ++i) {
            cw[i] ^= m[i];
            w += std::popcount(cw[i]);
        }
        if (w < r.distance) {
            r.distance = w;
            r.support.clear();
            for (u64 i = 0; i < n; ++i) {
                if (cw[i / 64] >> (i % 64) & 1) r.support.push_back(i);
            }
        }
    }
    r.codewords = steps;
    return r;
}

}  // namespace

ExhaustiveResult exhaustive_min_distance(const BchCode& code, const FieldTower& tower, const Budgets& budgets) {
    const u64 n = code.context.n, q = code.context.q, k = code.dimension;
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "the zero code has no minimum distance");
    u128 total = 1;
    for (u64 i = 0; i < k; ++i) {
        total *= q;
        if (total > budgets.max_codewords) over_budget("q^k codewords", budgets.max_codewords);
    }
    const Poly g = code.generator ? *code.generator : generator_polynomial(code.defining_set, tower);
    const Field& F = *tower.sub;
    const u64 p = F.characteristic();
    const unsigned e = tower.base.e;

    // GF(p)-basis of the code: p^y x^j g(x)
    std::vector<std::vector<Entry>> basis;
    for (u64 j = 0; j < k; ++j) {
        Code y = 1;
        for (unsigned yi = 0; yi < e; ++yi, y *= p) {
            std::vector<Entry> b;
            for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
                if (g.coeffs()[i]) b.push_back({j + i, F.mul(y, g.coeffs()[i])});
            }
            basis.push_back(std::move(b));
        }
    }
    const u64 steps = static_cast<u64>(total) - 1;
    if (q == 2) return binary_walk(basis, n, steps);

    // p-ary modular Gray code: step t adds the basis vector at the lowest
    // nonzero base-p digit of t
    std::vector<Code> cw(n, 0);
    u64 w = 0;
    ExhaustiveResult r;
    r.distance = n + 1;
    for (u64 t = 1; t <= steps; ++t) {
        u64 x = t;
        std::size_t idx = 0;
        while (x % p == 0) x /= p, ++idx;
        for (const Entry& en : basis[idx]) {
            const Code old = cw[en.pos];
            const Code now = F.add(old, en.val);
            cw[en.pos] = now;
            w = w + (now != 0) - (old != 0);
        }
        if (w < r.distance) {
            r.distance = w;
            r.support = support_of(cw);
        }
    }
    r.codewords = steps;
    return r;
}

// ---------------------------------------------------------------- low weight

namespace {

struct Indexed {
    std::uint64_t hash;
    u64 pos;
    Code scalar;
    bool operator<(const Indexed& o) const {
        return std::tie(hash, pos, scalar) < std::tie(o.hash, o.pos, o.scalar);
    }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    return h ^ (h >> 33);
}

class SyndromeIndex {
public:
    SyndromeIndex(const Field& top, std::vector<Code> cols, std::size_t R, u64 n, u64 q, u64& consumed, u64 budget)
        : F_(top), cols_(std::move(cols)), R_(R), n_(n), q_(q), consumed_(consumed), budget_(budget) {
        entries_.reserve(n * (q - 1));
        std::vector<Code> s(R);
        for (u64 k = 0; k < n; ++k) {
            for (Code c = 1; c < q; ++c) {
                scaled(k, c, s);
                entries_.push_back({hash(s), k, c});
                charge();
            }
        }
        std::sort(entries_.begin(), entries_.end());
    }

    const Code* col(u64 j) const { return cols_.data() + j * R_; }

    void scaled(u64 k, Code c, std::vector<Code>& out) const {
        const Code* v = col(k);
        for (std::size_t i = 0; i < R_; ++i) out[i] = F_.mul(c, v[i]);
    }

    // smallest (pos, scalar) with pos > after and scalar * col(pos) = target
    std::optional<std::pair<u64, Code>> find(const std::vector<Code>& target, u64 after) {
        charge();
        const std::uint64_t h = hash(target);
        auto it = std::lower_bound(entries_.begin(), entries_.end(), Indexed{h, after + 1, 0});
        std::vector<Code> s(R_);
        for (; it != entries_.end() && it->hash == h; ++it) {
            scaled(it->pos, it->scalar, s);
            if (s == target) return std::make_pair(it->pos, it->scalar);
        }
        return std::nullopt;
    }

private:
    std::uint64_t hash(const std::vector<Code>& s) const {
        std::uint64_t h = 0x84222325cbf29ce4ULL;
        for (Code c : s) h = mix(h, c);
        return h;
    }
    void charge() {
        if (++consumed_ > budget_) over_budget("syndrome insertions plus probes", budget_);
    }

    const Field& F_;
    std::vector<Code> cols_;
    std::size_t R_;
    u64 n_, q_;
    u64& consumed_;
    u64 budget_;
    std::vector<Indexed> entries_;
};

}  // namespace

LowWeightResult low_weight_search(const std::vector<u64>& rows, const FieldTower& tower, u64 n, unsigned wmax,
                                  const Budgets& budgets) {
    if (wmax == 0 || wmax > 4) throw Error(ErrorKind::InvalidArgument, "wmax must be in 1..4");
    const u64 q = tower.sub->size();
    const CosetContext ctx = CosetContext::make(q, n);
    u64 redundancy = 0;
    for (u64 r : rows) redundancy += coset_size(ctx, r % n);
    if (redundancy > 64) {
        throw Error(ErrorKind::RedundancyTooLarge, std::to_string(redundancy) + " scalar checks, limit 64");
    }
    const Field& F = *tower.top;
    const Code beta = tower.beta(n);
    const std::size_t R = rows.size();

    LowWeightResult res;
    // w = 1: only possible when there are no checks at all
    if (R == 0) {
        res.weight = 1;
        res.support = {0};
        res.coefficients = {1};
        return res;
    }
    if (wmax == 1) return res;

    std::vector<Code> cols(n * R);
    for (std::size_t i = 0; i < R; ++i) {
        const Code step = F.pow(beta, rows[i] % n);
        Code v = 1;
        for (u64 j = 0; j < n; ++j) {
            cols[j * R + i] = v;
            v = F.mul(v, step);
        }
    }
    SyndromeIndex index(F, std::move(cols), R, n, q, res.budget_consumed, budgets.max_syndromes);
    std::vector<Code> target(R), tmp(R);
    const Code* c0 = index.col(0);

    for (std::size_t i = 0; i < R; ++i) target[i] = F.neg(c0[i]);
    if (auto hit = index.find(target, 0)) {
        res.weight = 2;
        res.support = {0, hit->first};
        res.coefficients = {1, hit->second};
        return res;
    }
    if (wmax == 2) return res;

    for (u64 j = 1; j < n; ++j) {
        std::optional<std::pair<u64, Code>> best;
        Code best_cj = 0;
        for (Code cj = 1; cj < q; ++cj) {
            index.scaled(j, cj, tmp);
            for (std::size_t i = 0; i < R; ++i) target[i] = F.neg(F.add(c0[i], tmp[i]));
            auto hit = index.find(target, j);
            if (hit && (!best || hit->first < best->first)) best = hit, best_cj = cj;
        }
        if (best) {
            res.weight = 3;
            res.support = {0, j, best->first};
            res.coefficients = {1, best_cj, best->second};
            return res;
        }
    }
    if (wmax == 3) return res;

    std::vector<Code> partial(R);
    for (u64 j = 1; j < n; ++j) {
        for (u64 k = j + 1; k < n; ++k) {
            std::optional<std::pair<u64, Code>> best;
            Code bj = 0, bk = 0;
            for (Code cj = 1; cj < q; ++cj) {
                index.scaled(j, cj, tmp);
                for (std::size_t i = 0; i < R; ++i) partial[i] = F.add(c0[i], tmp[i]);
                for (Code ck = 1; ck < q; ++ck) {
                    index.scaled(k, ck, tmp);
                    for (std::size_t i = 0; i < R; ++i) target[i] = F.neg(F.add(partial[i], tmp[i]));
                    auto hit = index.find(target, k);
                    if (hit && (!best || hit->first < best->first)) best = hit, bj = cj, bk = ck;
                }
            }
            if (best) {
                res.weight = 4;
                res.support = {0, j, k, best->first};
                res.coefficients = {1, bj, bk, best->second};
                return res;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------- bounds

u64 sphere_packing_max_d(u64 n, u64 k, u64 q) {
    if (k == 0 || k > n) throw Error(ErrorKind::InvalidArgument, "needs 0 < k <= n");
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), q, n - k);
    mpz_class volume = 1, term = 1;
    u64 t = 0;
    // largest t with V(t) <= q^(n-k); V(n) = q^n always exceeds it
    while (t < n) {
        term = term * (n - t) * (q - 1) / (t + 1);
        if (volume + term > bound) break;
        volume += term;
        ++t;
    }
    return std::min<u64>(2 * t + 2, n - k + 1);
}

std::optional<u64> divisor_multiple_distance(u64 q, u64 n, u64 delta) {
    if (q < 2 || n == 0 || delta == 0) return std::nullopt;
    if (n % (q - 1) != 0 || std::gcd(n, q) != 1) return std::nullopt;
    const u64 quotient = n / (q - 1);
    for (u64 a = 1; a <= q - 1; ++a) {
        if (delta % a == 0 && quotient % (delta / a) == 0) return delta;
    }
    return std::nullopt;
}

}  // namespace bch_atlas
