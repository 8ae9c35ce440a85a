#include "bch_atlas/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "bch_atlas/codes.hpp"
#include "bch_atlas/distance.hpp"
#include "bch_atlas/leaders.hpp"

namespace bch_atlas {

namespace {

using Records = std::vector<CaseRecord>;

struct Task {
    std::string label;
    Json inputs;
    std::function<Records()> run;
};

CaseRecord compare(std::string id, Json inputs, Json formula, Json oracle, std::string note = {}) {
    const bool ok = formula == oracle;
    return {std::move(id), std::move(inputs), std::move(formula), std::move(oracle), ok, std::move(note)};
}

CaseRecord judged(std::string id, Json inputs, Json formula, Json oracle, bool ok, std::string note = {}) {
    return {std::move(id), std::move(inputs), std::move(formula), std::move(oracle), ok, std::move(note)};
}

CaseRecord skipped(std::string id, Json inputs, std::string note) {
    return {std::move(id), std::move(inputs), nullptr, nullptr, std::nullopt, std::move(note)};
}

// A sweep reports how many values it checked and how many behaved as claimed.
struct Tally {
    u64 checked = 0, held = 0;
    std::optional<u64> first_failure;
    void add(u64 value, bool ok) {
        ++checked;
        if (ok) ++held;
        else if (!first_failure) first_failure = value;
    }
    CaseRecord record(std::string id, Json inputs) const {
        std::string note;
        if (first_failure) note = "first failure at " + std::to_string(*first_failure);
        if (checked == 0) return skipped(std::move(id), std::move(inputs), "nothing in range");
        return compare(std::move(id), std::move(inputs), json_number(checked), json_number(held), note);
    }
};

Json leader_json(u64 leader, u64 size) {
    Json j;
    j["leader"] = json_number(leader);
    j["size"] = json_number(size);
    return j;
}

Json qm(u64 q, unsigned m) {
    Json j;
    j["q"] = q;
    j["m"] = m;
    return j;
}

Json qs(u64 q, unsigned s) {
    Json j;
    j["q"] = q;
    j["s"] = s;
    return j;
}

Json qn(u64 q, u64 n) {
    Json j;
    j["q"] = q;
    j["n"] = json_number(n);
    return j;
}

Json with(Json j, const char* key, Json v) {
    j[key] = std::move(v);
    return j;
}

i128 P(u64 q, unsigned e) { return ipow(static_cast<i128>(q), e); }

std::vector<u64> leaders_among(const CosetPartition& part, const std::vector<u64>& residues) {
    std::vector<u64> out;
    for (u64 r : residues) {
        if (part.leader(part.id_of(r)) == r) out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------- leaders-primitive

std::vector<Task> leaders_primitive(const VerifyOptions& o) {
    std::vector<Task> tasks;
    for (u64 q : {2, 3, 4, 5}) {
        for (unsigned m = 4; m <= 14; ++m) {
            const i128 n = P(q, m) - 1;
            if (n > 1'000'000) break;
            tasks.push_back({"primitive.leader", qm(q, m), [=] {
                const auto ctx = CosetContext::make(q, static_cast<u64>(n));
                const unsigned R = primitive_max_rank(m);
                const auto oracle = k_largest_leaders(ctx, R, o.budgets);
                Records out;
                for (unsigned i = 1; i <= R; ++i) {
                    const auto f = primitive_delta(q, m, i);
                    Json oj = i <= oracle.size() ? leader_json(oracle[i - 1].leader, oracle[i - 1].size) : Json(nullptr);
                    out.push_back(compare(f.provenance, with(qm(q, m), "rank", i), leader_json(f.value, f.coset_size), oj));
                }
                return out;
            }});
        }
    }
    // leader status in the band [q^s + 1, q^(s+1)] for m = 2s
    for (auto [q, s] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
        tasks.push_back({"primitive.band-classification", qs(q, s), [=] {
            const u64 n = static_cast<u64>(P(q, 2 * s) - 1);
            const auto ctx = CosetContext::make(q, n);
            Tally t;
            for (u64 a = static_cast<u64>(P(q, s)) + 1; a <= static_cast<u64>(P(q, s + 1)); ++a) {
                if (a % q == 0) continue;
                const BandClass c = primitive_band_classify(q, s, a);
                const bool leader = leader_of(ctx, a) == a;
                const u64 size = coset_size(ctx, a);
                bool ok = false;
                switch (c) {
                    case BandClass::LeaderHalf: ok = leader && size == s; break;
                    case BandClass::LeaderFull: ok = leader && size == 2 * s; break;
                    case BandClass::NotLeader: ok = !leader; break;
                }
                t.add(a, ok);
            }
            return Records{t.record("primitive.band-classification", qs(q, s))};
        }});
    }
    // small integers prime to q are leaders of full size
    for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 63}, {2, 85}, {2, 255}, {2, 341}, {3, 80}, {3, 182}, {4, 341}, {5, 124}}) {
        tasks.push_back({"small-leaders", qn(q, n), [=] {
            const auto ctx = CosetContext::make(q, n);
            const unsigned m = static_cast<unsigned>(ctx.m);
            Tally t;
            if (!(P(q, m / 2) < static_cast<i128>(n))) {
                return Records{skipped("small-leaders", qn(q, n), "n is not above q^floor(m/2)")};
            }
            const i128 bound = static_cast<i128>(n) * P(q, (m + 1) / 2) / (P(q, m) - 1);
            for (u64 s = 1; static_cast<i128>(s) <= bound; ++s) {
                if (s % q == 0) continue;
                t.add(s, leader_of(ctx, s) == s && coset_size(ctx, s) == m);
            }
            return Records{t.record("small-leaders", qn(q, n))};
        }});
    }
    return tasks;
}

// ---------------------------------------------------------------- leaders-anti

std::vector<Task> leaders_anti(const VerifyOptions& o) {
    std::vector<Task> tasks;
    const std::vector<std::pair<u64, unsigned>> grid{{2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
                                                     {3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 3}, {5, 3}};
    for (auto [q, s] : grid) {
        tasks.push_back({"anti.leader", qs(q, s), [=] {
            const auto fp = FamilyParams::make(Family::AntiPrimitive, q, s);
            const auto oracle = k_largest_leaders(fp.context(), 2, o.budgets);
            Records out;
            for (unsigned rank = 1; rank <= 2; ++rank) {
                const Json in = with(qs(q, s), "rank", rank);
                const Json oj = leader_json(oracle[rank - 1].leader, oracle[rank - 1].size);
                try {
                    const auto f = anti_delta(q, s, rank);
                    if (!f.covered()) {
                        out.push_back(skipped("anti.leader", in, f.gap().reason));
                        continue;
                    }
                    out.push_back(compare(f->provenance, in, leader_json(f->value, f->coset_size), oj));
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::IntegralityViolation) throw;
                    out.push_back(judged("anti.leader", in, nullptr, oj, false, e.what()));
                }
            }
            return out;
        }});
    }
    for (auto [q, s] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {2, 6}, {3, 4}, {4, 4}, {3, 6}}) {
        tasks.push_back({"anti.interval-classification", qs(q, s), [=] {
            const auto ctx = FamilyParams::make(Family::AntiPrimitive, q, s).context();
            const i128 lo = ((static_cast<i128>(q) + 1) / 2) * P(q, s - 1);
            Tally t;
            for (i128 i = lo; i * (q + 1) < P(q, s + 1) + 1; ++i) {
                if (i % q == 0) continue;
                const u64 x = static_cast<u64>(i);
                const auto v = anti_interval_is_leader(q, s, x);
                const bool leader = leader_of(ctx, x) == x;
                t.add(x, v.leader ? (leader && coset_size(ctx, x) == v.coset_size) : !leader);
            }
            return Records{t.record("anti.interval-classification", qs(q, s))};
        }});
    }
    // (q+1)t is a leader modulo q^m - 1 exactly when t is one modulo n
    for (auto [q, s] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {2, 5}, {3, 3}, {4, 3}}) {
        tasks.push_back({"anti.leader-transfer", qs(q, s), [=] {
            const u64 big = static_cast<u64>(P(q, 2 * s) - 1), n = big / (q + 1);
            const auto cb = CosetContext::make(q, big), cn = CosetContext::make(q, n);
            Tally t;
            for (u64 x = 0; x < n; ++x) {
                const u64 h = x * (q + 1);
                t.add(x, (leader_of(cb, h) == h) == (leader_of(cn, x) == x));
            }
            return Records{t.record("anti.leader-transfer", qs(q, s))};
        }});
    }
    return tasks;
}

// ---------------------------------------------------------------- leaders-projective

std::vector<Task> leaders_projective(const VerifyOptions& o) {
    std::vector<Task> tasks;
    const std::vector<std::pair<u64, unsigned>> grid{{3, 4}, {3, 5}, {3, 6}, {4, 4}, {4, 5}, {4, 6}, {4, 7}, {4, 8},
                                                     {4, 10}, {5, 4}, {5, 5}, {5, 6}, {5, 7}, {5, 9}, {7, 4}, {7, 7},
                                                     {7, 8}};
    for (auto [q, m] : grid) {
        tasks.push_back({"projective.leader", qm(q, m), [=] {
            const auto fp = FamilyParams::make(Family::Projective, q, m);
            const auto oracle = k_largest_leaders(fp.context(), 2, o.budgets);
            Records out;
            const auto d1 = proj_delta1(q, m);
            out.push_back(compare(d1.provenance, with(qm(q, m), "rank", 1), leader_json(d1.value, d1.coset_size),
                                  leader_json(oracle[0].leader, oracle[0].size)));
            const auto d2 = proj_delta2(q, m);
            const Json in = with(qm(q, m), "rank", 2);
            if (!d2.covered()) {
                out.push_back(skipped("projective.second", in, d2.gap().reason));
            } else {
                out.push_back(compare(d2->provenance, in, leader_json(d2->value, d2->coset_size),
                                      leader_json(oracle[1].leader, oracle[1].size)));
            }
            return out;
        }});
    }
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{4, 5}, {4, 6}, {5, 5}, {5, 6}, {7, 4}}) {
        tasks.push_back({"projective.leader-digit-condition", qm(q, m), [=] {
            const CosetPartition part(FamilyParams::make(Family::Projective, q, m).context(), o.budgets);
            Tally t;
            for (const auto& e : part.leaders()) {
                if (e.leader == 0) continue;
                t.add(e.leader, proj_leader_necessary(q, m, e.leader));
            }
            return Records{t.record("projective.leader-digit-condition", qm(q, m))};
        }});
    }
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 5}}) {
        tasks.push_back({"projective.run-rotation", qm(q, m), [=] {
            const auto ctx = FamilyParams::make(Family::Projective, q, m).context();
            Tally boundary, inside;
            for (u64 t = 0; t < ctx.n; ++t) {
                const auto form = run_length_form(ctx, t);
                if (!form) continue;
                u64 total = 0;
                for (u64 r : form->runs) total += r;
                if (total != m - 1) continue;  // runs must fill every digit below the top one
                const auto& nr = form->runs;
                auto above = [&](unsigned l) {  // sum of n_i for i >= l
                    u64 acc = 0;
                    for (unsigned i = l; i < q; ++i) acc += nr[i];
                    return acc;
                };
                for (unsigned l = 2; l <= q - 1; ++l) {
                    if (nr[l] == 0) continue;
                    std::vector<u64> rot(q, 0);
                    for (unsigned v = 1; v <= q - 1; ++v) {
                        if (v >= q - l + 1) rot[v] = nr[v - (q - l)] + (v == q - l + 1 ? 1 : 0);
                        else rot[v] = nr[v + l - 1] - (v == 1 ? 1 : 0);
                    }
                    RunLengthForm f{rot, m};
                    const u64 expect = from_q_digits(f.digits(), q);
                    boundary.add(t, rotate_residue(ctx, t, above(l)) == expect);
                }
                for (unsigned l = 1; l <= q - 1; ++l) {
                    for (u64 j = above(l + 1) + 1; j < above(l); ++j) inside.add(t, rotate_residue(ctx, t, j) > t);
                }
            }
            return Records{boundary.record("projective.run-rotation.boundary", qm(q, m)),
                           inside.record("projective.run-rotation.inside-run", qm(q, m))};
        }});
    }
    return tasks;
}

// ---------------------------------------------------------------- dims-anti

struct Named {
    Family family;
    u64 q;
    unsigned param;
    u64 delta;
    u64 claimed_n, claimed_k;
};

std::vector<Task> dims_anti(const VerifyOptions& o) {
    std::vector<Task> tasks;
    for (auto [q, s] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {2, 5}, {2, 7}, {3, 3}, {3, 4}, {4, 3}, {4, 4}}) {
        tasks.push_back({"anti.dimension", qs(q, s), [=] {
            const auto fp = FamilyParams::make(Family::AntiPrimitive, q, s);
            const CosetPartition part(fp.context(), o.budgets);
            const u64 top = std::min<u64>(static_cast<u64>(P(q, s)) + 1, fp.n());
            const auto dims = dimension_profile(part, 1, top);
            Records out;
            for (u64 d = 2; d <= top; ++d) {
                const Json in = with(qs(q, s), "delta", json_number(d));
                for (auto* fn : {&anti_small_delta_dimension, &anti_mid_delta_dimension}) {
                    try {
                        const auto f = (*fn)(q, s, d);
                        if (f.covered()) out.push_back(compare(f->formula_id, in, json_number(f->k), json_number(dims[d - 2])));
                    } catch (const Error& e) {
                        out.push_back(judged("anti.dimension", in, nullptr, json_number(dims[d - 2]), false, e.what()));
                    }
                }
            }
            return out;
        }});
    }
    const std::vector<Named> named{{Family::AntiPrimitive, 2, 4, 9, 85, 53},    {Family::AntiPrimitive, 2, 5, 31, 341, 206},
                                   {Family::AntiPrimitive, 2, 5, 11, 341, 291}, {Family::AntiPrimitive, 2, 5, 149, 341, 16},
                                   {Family::AntiPrimitive, 3, 3, 101, 182, 10}, {Family::Projective, 4, 5, 229, 341, 11},
                                   {Family::Projective, 4, 5, 233, 341, 6}};
    for (const Named& c : named) {
        Json in;
        in["family"] = family_name(c.family);
        in["q"] = c.q;
        in[c.family == Family::AntiPrimitive ? "s" : "m"] = c.param;
        in["delta"] = c.delta;
        in["claimed"] = Json::array({c.claimed_n, c.claimed_k});
        tasks.push_back({"named-example", in, [=] {
            const auto fp = FamilyParams::make(c.family, c.q, c.param);
            const CosetPartition part(fp.context(), o.budgets);
            const u64 k = make_code(part, c.delta, 1).dimension;
            const auto f = dimension_closed_form(c.family, c.q, c.param, c.delta);
            const Json fj = f.covered() ? json_number(f->k) : Json(nullptr);
            const bool ok = f.covered() && f->k == k && k == c.claimed_k && fp.n() == c.claimed_n;
            return Records{judged(f.covered() ? f->formula_id : "named-example", in, fj, json_number(k), ok)};
        }});
    }
    return tasks;
}

// ---------------------------------------------------------------- dims-special

std::vector<Task> dims_special(const VerifyOptions& o) {
    std::vector<Task> tasks;
    const std::vector<std::pair<u64, unsigned>> special{{2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 3}, {3, 4},
                                                        {3, 5}, {4, 3}, {4, 4}, {5, 3}, {7, 3}};
    for (auto [q, s] : special) {
        tasks.push_back({"anti.special-delta", qs(q, s), [=] {
            const auto fp = FamilyParams::make(Family::AntiPrimitive, q, s);
            const CosetPartition part(fp.context(), o.budgets);
            const u64 top = std::min<u64>(static_cast<u64>(P(q, s)) + 1, fp.n());
            const auto dims = dimension_profile(part, 1, top);
            Records out;
            for (u64 d = 2; d <= top; ++d) {
                const Json in = with(qs(q, s), "delta", json_number(d));
                try {
                    const auto f = anti_special_delta_dimension(q, s, d);
                    if (f.covered()) out.push_back(compare(f->formula_id, in, json_number(f->k), json_number(dims[d - 2])));
                } catch (const Error& e) {
                    out.push_back(judged("anti.special-delta", in, nullptr, json_number(dims[d - 2]), false, e.what()));
                }
            }
            return out;
        }});
    }
    // dimensions over the two top bands
    const std::vector<std::tuple<Family, u64, unsigned>> bands{
        {Family::AntiPrimitive, 2, 5}, {Family::AntiPrimitive, 2, 7}, {Family::AntiPrimitive, 2, 8},
        {Family::AntiPrimitive, 2, 9}, {Family::AntiPrimitive, 2, 10}, {Family::AntiPrimitive, 3, 3},
        {Family::AntiPrimitive, 3, 4}, {Family::AntiPrimitive, 3, 5}, {Family::AntiPrimitive, 3, 6},
        {Family::AntiPrimitive, 5, 3}, {Family::Projective, 4, 5},     {Family::Projective, 4, 6},
        {Family::Projective, 4, 8},    {Family::Projective, 4, 10},    {Family::Projective, 5, 6},
        {Family::Projective, 5, 7},    {Family::Projective, 7, 8}};
    for (auto [fam, q, p] : bands) {
        Json base;
        base["family"] = family_name(fam);
        base["q"] = q;
        base[fam == Family::AntiPrimitive ? "s" : "m"] = p;
        tasks.push_back({"top-band", base, [=, fam = fam, q = q, p = p] {
            u64 d1 = 0, d2 = 0;
            std::string gap;
            try {
                if (fam == Family::AntiPrimitive) {
                    const auto a2 = anti_delta(q, p, 2);
                    if (a2.covered()) d1 = anti_delta(q, p, 1)->value, d2 = a2->value;
                    else gap = a2.gap().reason;
                } else {
                    const auto b2 = proj_delta2(q, p);
                    if (b2.covered()) d1 = proj_delta1(q, p).value, d2 = b2->value;
                    else gap = b2.gap().reason;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::IntegralityViolation) throw;
                gap = e.what();
            }
            if (!gap.empty()) return Records{skipped("top-band", base, gap)};
            const auto fp = FamilyParams::make(fam, q, p);
            const CosetPartition part(fp.context(), o.budgets);
            const auto dims = dimension_profile(part, 1, d1);
            const auto band = top_band_dimension(fam, q, p, d1);
            std::set<u64> seen;
            for (u64 d = d2 + 1; d <= d1; ++d) seen.insert(dims[d - 2]);
            Json oracle = Json::array();
            for (u64 k : seen) oracle.push_back(json_number(k));
            Json in = with(base, "delta", Json::array({json_number(d2 + 1), json_number(d1)}));
            Records out{compare(band->formula_id, in, Json::array({json_number(band->k)}), oracle)};
            const auto at2 = top_band_dimension(fam, q, p, d2);
            out.push_back(compare(at2->formula_id, with(base, "delta", json_number(d2)), json_number(at2->k),
                                  json_number(dims[d2 - 2])));
            return out;
        }});
    }
    // i-th largest primitive leaders as designed distances
    for (u64 q : {2, 3, 4, 5}) {
        for (unsigned m = 4; m <= 14; ++m) {
            const i128 n = P(q, m) - 1;
            if (n > 1'000'000) break;
            if (primitive_max_rank(m) < 3) continue;
            tasks.push_back({"primitive.ith-leader-dimension", qm(q, m), [=] {
                const CosetPartition part(CosetContext::make(q, static_cast<u64>(n)), o.budgets);
                const u64 d3 = primitive_delta(q, m, 3).value;
                const auto dims = dimension_profile(part, 1, d3);
                Records out;
                for (unsigned i = 3; i <= primitive_max_rank(m); ++i) {
                    const u64 d = primitive_delta(q, m, i).value;
                    const auto f = primitive_leader_dimension(q, m, d);
                    Json in = with(with(qm(q, m), "rank", i), "delta", json_number(d));
                    out.push_back(compare(f->formula_id, in, json_number(f->k), json_number(dims[d - 2])));
                }
                return out;
            }});
        }
    }
    // example labels: designed distance or dimension?
    for (auto [q, s, label, delta] : std::vector<std::tuple<u64, unsigned, u64, u64>>{{2, 4, 69, 5}, {2, 5, 206, 31}, {2, 5, 291, 11}}) {
        Json in = with(with(qs(q, s), "label", label), "delta", delta);
        tasks.push_back({"example-label", in, [=, q = q, s = s, label = label, delta = delta] {
            const auto fp = FamilyParams::make(Family::AntiPrimitive, q, s);
            const CosetPartition part(fp.context(), o.budgets);
            const u64 k_at_delta = make_code(part, delta, 1).dimension;
            const u64 k_at_label = make_code(part, label, 1).dimension;
            return Records{compare("example-label.as-dimension", in, json_number(label), json_number(k_at_delta),
                                   "reading the label as a designed distance gives k = " + std::to_string(k_at_label))};
        }});
    }
    return tasks;
}

// ---------------------------------------------------------------- dually-bch-all

std::vector<Task> dually_bch_all(const VerifyOptions& o) {
    std::vector<Task> tasks;
    const std::vector<std::tuple<Family, u64, unsigned>> grid{
        {Family::Primitive, 2, 6},     {Family::Primitive, 3, 4},     {Family::Primitive, 2, 7},
        {Family::Primitive, 3, 3},     {Family::AntiPrimitive, 2, 4}, {Family::AntiPrimitive, 3, 2},
        {Family::AntiPrimitive, 2, 6}, {Family::AntiPrimitive, 2, 5}, {Family::AntiPrimitive, 3, 3},
        {Family::AntiPrimitive, 4, 2}, {Family::Projective, 3, 4},    {Family::Projective, 4, 4},
        {Family::Projective, 4, 5},    {Family::Projective, 3, 5},    {Family::Projective, 5, 4}};
    for (auto [fam, q, p] : grid) {
        for (u64 b : {1, 2}) {
            Json base;
            base["family"] = family_name(fam);
            base["q"] = q;
            base[fam == Family::AntiPrimitive ? "s" : "m"] = p;
            base["b"] = b;
            tasks.push_back({"dually-bch", base, [=, fam = fam, q = q, p = p] {
                const auto fp = FamilyParams::make(fam, q, p);
                const u64 n = fp.n();
                const auto probe = dually_bch_closed_form(fam, q, p, 2, b);
                if (!probe.covered()) return Records{skipped("dually-bch", base, probe.gap().reason)};
                const CosetPartition part(fp.context(), o.budgets);
                Records out;
                for (u64 d = 2; d <= n - 1; ++d) {
                    const auto T = defining_set(part, d, b);
                    const bool direct = is_dually_bch_direct(part, T).verdict;
                    const auto f = dually_bch_closed_form(fam, q, p, d, b);
                    out.push_back(compare(f->formula_id, with(base, "delta", json_number(d)), f->value, direct));
                }
                return out;
            }});
        }
    }
    // delta_1 lies in the dual defining set for b = 2 and small delta
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 4}, {5, 5}, {7, 4}}) {
        tasks.push_back({"projective.top-leader-in-dual", qm(q, m), [=] {
            const auto fp = FamilyParams::make(Family::Projective, q, m);
            const CosetPartition part(fp.context(), o.budgets);
            const u64 d1 = proj_delta1(q, m).value;
            Records out;
            for (u64 d = 2; d <= q - 1; ++d) {
                const auto perp = dualize(defining_set(part, d, 2));
                const bool in = std::binary_search(perp.begin(), perp.end(), d1);
                out.push_back(compare("projective.top-leader-in-dual", with(with(qm(q, m), "b", 2), "delta", d), true, in));
            }
            return out;
        }});
    }
    return tasks;
}

// ---------------------------------------------------------------- tilde-dual

std::vector<Task> tilde_dual(const VerifyOptions& o) {
    std::vector<Task> tasks;
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{2, 6}, {2, 7}, {2, 8}, {3, 3}, {3, 4}, {4, 3}, {5, 2}}) {
        tasks.push_back({"tilde-dual", qm(q, m), [=] {
            const CosetPartition part(CosetContext::make(q, static_cast<u64>(P(q, m) - 1)), o.budgets);
            const u64 n = part.context().n;
            Records out;
            for (u64 d = 2; d <= n; ++d) {
                const auto f = tilde_dual_narrow_sense_closed(q, m, d);
                const bool direct = tilde_dual_narrow_sense_direct(part, d);
                out.push_back(compare(f->formula_id, with(qm(q, m), "delta", json_number(d)), f->value, direct));
            }
            return out;
        }});
    }
    return tasks;
}

// ---------------------------------------------------------------- distances

Json claim_at_least(u64 d) {
    Json j;
    j["at_least"] = json_number(d);
    return j;
}

Json claim_between(u64 lo, u64 hi) {
    Json j;
    j["between"] = Json::array({json_number(lo), json_number(hi)});
    return j;
}

Json code_inputs(u64 q, u64 n, u64 delta) { return with(qn(q, n), "delta", json_number(delta)); }

std::vector<Task> distances(const VerifyOptions& o) {
    std::vector<Task> tasks;
    // exact distance claims checked by a full codeword sweep
    struct Sweep {
        u64 q, n, delta;
        Json claim;
        u64 lo, hi;
    };
    const std::vector<Sweep> sweeps{{2, 15, 7, Json(7), 7, 7},
                                    {2, 341, 149, claim_at_least(149), 149, 341},
                                    {3, 182, 101, claim_at_least(101), 101, 182}};
    for (const Sweep& s : sweeps) {
        tasks.push_back({"exhaustive", code_inputs(s.q, s.n, s.delta), [=] {
            const CosetPartition part(CosetContext::make(s.q, s.n), o.budgets);
            const auto code = make_code(part, s.delta, 1);
            const auto tower = build_tower_for(s.q, static_cast<unsigned>(part.context().m));
            const u64 d = exhaustive_min_distance(code, tower, o.budgets).distance;
            const u64 bose = bose_distance(code.defining_set), sp = sphere_packing_max_d(s.n, code.dimension, s.q);
            const Json in = with(code_inputs(s.q, s.n, s.delta), "k", json_number(code.dimension));
            return Records{judged("exhaustive.claimed-distance", in, s.claim, json_number(d), s.lo <= d && d <= s.hi),
                           judged("distance-chain", in, Json::array({json_number(bose), json_number(sp)}),
                                  json_number(d), bose <= d && d <= sp, "bose <= d <= Hamming bound")};
        }});
    }
    // divisor-multiple distances against the Bose distance and, where feasible, a full sweep
    for (auto [q, n, delta] : std::vector<std::tuple<u64, u64, u64>>{{2, 341, 31}, {2, 341, 11}}) {
        tasks.push_back({"divisor-multiple", code_inputs(q, n, delta), [=, q = q, n = n, delta = delta] {
            const CosetPartition part(CosetContext::make(q, n), o.budgets);
            const auto code = make_code(part, delta, 1);
            const auto f = divisor_multiple_distance(q, n, delta);
            return Records{compare("divisor-multiple.bose", code_inputs(q, n, delta), f ? json_number(*f) : Json(nullptr),
                                   json_number(bose_distance(code.defining_set)))};
        }});
    }
    for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 15}, {2, 21}, {2, 63}, {2, 85}, {3, 8}, {3, 26}, {4, 15}}) {
        tasks.push_back({"divisor-multiple.exhaustive", qn(q, n), [=] {
            const CosetPartition part(CosetContext::make(q, n), o.budgets);
            const auto tower = build_tower_for(q, static_cast<unsigned>(part.context().m));
            Budgets b = o.budgets;
            b.max_codewords = std::min<u64>(b.max_codewords, u64{1} << 20);
            Records out;
            for (u64 d = 2; d <= n; ++d) {
                const auto f = divisor_multiple_distance(q, n, d);
                if (!f) continue;
                const auto code = make_code(part, d, 1);
                const Json in = with(code_inputs(q, n, d), "k", json_number(code.dimension));
                if (code.dimension == 0) continue;
                try {
                    const u64 ex = exhaustive_min_distance(code, tower, b).distance;
                    out.push_back(compare("divisor-multiple.exhaustive", in, json_number(*f), json_number(ex)));
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::BudgetExceeded) throw;
                    out.push_back(skipped("divisor-multiple.exhaustive", in, e.what()));
                }
            }
            return out;
        }});
    }
    // Bose distance d_i = q^m - q^(m-1) - q^i - 1 is the true distance
    for (unsigned m : {6u, 7u, 8u}) {
        for (unsigned i = (m - 1) / 2; i + m / 3 + 1 <= m; ++i) {
            if (2 * i + 2 < m) continue;
            const u64 n = (u64{1} << m) - 1;
            const u64 di = n + 1 - (u64{1} << (m - 1)) - (u64{1} << i) - 1;
            Json in = with(code_inputs(2, n, di), "i", i);
            tasks.push_back({"bose-equals-distance", in, [=] {
                const CosetPartition part(CosetContext::make(2, n), o.budgets);
                const auto code = make_code(part, di, 1);
                const u64 bose = bose_distance(code.defining_set);
                const Json inn = with(in, "k", json_number(code.dimension));
                if (bose != di) {
                    return Records{skipped("bose-equals-distance", inn, "Bose distance is " + std::to_string(bose))};
                }
                const auto tower = build_tower_for(2, m);
                try {
                    const u64 d = exhaustive_min_distance(code, tower, o.budgets).distance;
                    return Records{compare("bose-equals-distance", inn, json_number(di), json_number(d))};
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::BudgetExceeded) throw;
                    return Records{skipped("bose-equals-distance", inn, e.what())};
                }
            }});
        }
    }
    // dual distances over the two top anti-primitive bands
    for (auto [q, s] : std::vector<std::pair<u64, unsigned>>{{2, 5}, {2, 7}, {3, 5}, {2, 8}}) {
        tasks.push_back({"anti.dual-distance", qs(q, s), [=, q = q, s = s] {
            const auto fp = FamilyParams::make(Family::AntiPrimitive, q, s);
            const CosetPartition part(fp.context(), o.budgets);
            const auto tower = build_tower_for(q, 2 * s);
            const u64 n = fp.n();
            const u64 d1 = anti_delta(q, s, 1)->value, d2 = anti_delta(q, s, 2)->value;
            Records out;
            auto check = [&](u64 delta, u64 lo, u64 hi, std::string id) {
                const auto code = make_code(part, delta, 1);
                const auto rows = leaders_among(part, dualize(code.defining_set));
                const Json in = with(with(qs(q, s), "delta", json_number(delta)), "dual_k", json_number(n - code.dimension));
                try {
                    const auto lw = low_weight_search(rows, tower, n, 4, o.budgets);
                    std::string note;
                    if (delta == d2 && s % 2 == 1) {
                        note = "Hamming bound on the dual allows d up to " +
                               std::to_string(sphere_packing_max_d(n, n - code.dimension, q));
                    }
                    const Json got = lw.weight ? json_number(*lw.weight) : Json("none up to 4");
                    const bool ok = lw.weight && lo <= *lw.weight && *lw.weight <= hi;
                    out.push_back(judged(std::move(id), in, lo == hi ? json_number(lo) : claim_between(lo, hi), got, ok, note));
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::BudgetExceeded) throw;
                    out.push_back(skipped(std::move(id), in, e.what()));
                }
            };
            if (s % 2 == 1) {
                check(d1, 2, 2, "anti.dual-distance.top-band");
                check(d2 + 1, 2, 2, "anti.dual-distance.top-band");
            } else {
                check(d1, 3, 4, "anti.dual-distance.top-band");
            }
            check(d2, 3, 4, "anti.dual-distance.second-leader");
            return out;
        }});
    }
    // dual of the tilde code over the top band: one coset, Hamming-like for even s
    for (auto [q, s] : std::vector<std::pair<u64, unsigned>>{{2, 5}, {2, 7}, {2, 8}}) {
        tasks.push_back({"anti.tilde-dual", qs(q, s), [=, q = q, s = s] {
            const auto fp = FamilyParams::make(Family::AntiPrimitive, q, s);
            const CosetPartition part(fp.context(), o.budgets);
            const u64 n = fp.n();
            const u64 d1 = anti_delta(q, s, 1)->value;
            auto perp = dualize(make_code(part, d1, 1).defining_set);
            perp.erase(std::remove(perp.begin(), perp.end(), u64{0}), perp.end());
            const auto rows = leaders_among(part, perp);
            const u64 want_size = s % 2 ? s : 2 * s, want_d = s % 2 ? 2 : 3;
            Json in = with(qs(q, s), "delta", json_number(d1));
            Records out;
            Json shape = Json::array();
            for (u64 r : rows) shape.push_back(leader_json(r, part.size(part.id_of(r))));
            const u64 expected_leader = static_cast<u64>(s % 2 ? (P(q, s) + 1) / (q + 1) : (P(q, s - 1) + 1) / (q + 1));
            out.push_back(compare("anti.tilde-dual.defining-set", in, Json::array({leader_json(expected_leader, want_size)}), shape));
            if (s % 2 == 0) {
                out.push_back(compare("anti.tilde-dual.coprime", in, json_number(u64{1}),
                                      json_number(std::gcd<u64>(expected_leader, n))));
            }
            const auto tower = build_tower_for(q, 2 * s);
            const auto lw = low_weight_search(rows, tower, n, 4, o.budgets);
            out.push_back(compare("anti.tilde-dual.distance", in, json_number(want_d),
                                  lw.weight ? json_number(*lw.weight) : Json("none up to 4")));
            return out;
        }});
    }
    return tasks;
}

using SuiteFn = std::vector<Task> (*)(const VerifyOptions&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"leaders-primitive", &leaders_primitive}, {"leaders-anti", &leaders_anti},
        {"leaders-projective", &leaders_projective}, {"dims-anti", &dims_anti},
        {"dims-special", &dims_special},           {"dually-bch-all", &dually_bch_all},
        {"tilde-dual", &tilde_dual},               {"distances", &distances}};
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"leaders-primitive", "leaders-anti", "leaders-projective", "dims-anti",
                                                "dims-special",      "dually-bch-all", "tilde-dual",      "distances"};
    return names;
}

unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* v = std::getenv("BCH_ATLAS_THREADS")) {
        char* end = nullptr;
        const unsigned long x = std::strtoul(v, &end, 10);
        if (end && *end == '\0' && x > 0) return static_cast<unsigned>(std::min<unsigned long>(x, 256));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
    const auto tasks = it->second(opts);
    std::vector<Records> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            try {
                results[i] = tasks[i].run();
            } catch (const Error& e) {
                results[i] = {skipped(tasks[i].label, tasks[i].inputs, e.what())};
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(resolve_threads(opts.threads), std::max<std::size_t>(1, tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SuiteReport r;
    r.suite = name;
    for (auto& recs : results) {
        for (auto& c : recs) {
            ++r.total;
            if (!c.agree) ++r.skipped;
            else if (*c.agree) ++r.agree;
            else ++r.disagree;
            r.cases.push_back(std::move(c));
        }
    }
    return r;
}

Json to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["cases"] = Json::array();
    for (const auto& c : r.cases) {
        Json cj;
        cj["id"] = c.id;
        cj["inputs"] = c.inputs;
        cj["formula"] = c.formula;
        cj["oracle"] = c.oracle;
        cj["agree"] = c.agree ? Json(*c.agree) : Json(nullptr);
        cj["note"] = c.note.empty() ? Json(nullptr) : Json(c.note);
        j["cases"].push_back(std::move(cj));
    }
    Json s;
    s["total"] = r.total;
    s["agree"] = r.agree;
    s["disagree"] = r.disagree;
    s["skipped"] = r.skipped;
    j["summary"] = s;
    return j;
}

std::vector<std::vector<std::string>> tsv_rows(const SuiteReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.cases) {
        const char* status = !c.agree ? "skipped" : (*c.agree ? "agree" : "disagree");
        rows.push_back({r.suite, c.id, c.inputs.dump(), c.formula.dump(), c.oracle.dump(), status, c.note});
    }
    return rows;
}

}  // namespace bch_atlas
