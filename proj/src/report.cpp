#include "bch_atlas/report.hpp"

#include "bch_atlas/distance.hpp"
#include "bch_atlas/leaders.hpp"

namespace bch_atlas {

namespace {

constexpr u64 kExactJsonLimit = u64{1} << 53;

std::vector<u64> leaders_among(const CosetPartition& part, const std::vector<u64>& residues) {
    std::vector<u64> out;
    for (u64 r : residues) {
        if (part.leader(part.id_of(r)) == r) out.push_back(r);
    }
    return out;
}

// Dual-distance claims for the two top bands of the anti-primitive length.
void top_band_notes(const FamilyParams& fp, const CosetPartition& part, const BchCode& code,
                    const ReportOptions& opts, std::optional<FieldTower>& tower, std::vector<std::string>& notes) {
    if (fp.family != Family::AntiPrimitive || code.b != 1) return;
    const unsigned s = fp.param;
    if (s <= 4 || s == 6) return;
    const auto first = anti_delta(fp.q, s, 1);
    const auto second = anti_delta(fp.q, s, 2);
    if (!second.covered()) return;
    const u64 d1 = first->value, d2 = second->value, delta = code.delta;
    std::string claim;
    u64 lo = 0, hi = 0;
    if (d2 < delta && delta <= d1) {
        if (s % 2) claim = "2", lo = hi = 2;
        else claim = "[3,4]", lo = 3, hi = 4;
    } else if (delta == d2) {
        claim = "[3,4]", lo = 3, hi = 4;
    } else {
        return;
    }
    notes.push_back("dual distance claimed " + claim);
    const u64 n = fp.n(), dual_k = n - code.dimension;
    if (delta == d2 && s % 2 == 1 && dual_k > 0) {
        const u64 sp = sphere_packing_max_d(n, dual_k, fp.q);
        if (sp > 4) {
            notes.push_back("Hamming bound on the dual allows d up to " + std::to_string(sp) +
                            ", so packing alone does not force d <= 4");
        }
    }
    if (!opts.dual_window) return;
    try {
        if (!tower) tower = build_tower_for(fp.q, static_cast<unsigned>(part.context().m));
        const auto rows = leaders_among(part, dualize(code.defining_set));
        const auto lw = low_weight_search(rows, *tower, n, 4, opts.budgets);
        if (lw.weight) {
            const bool ok = lo <= *lw.weight && *lw.weight <= hi;
            notes.push_back("low-weight search on the dual: d = " + std::to_string(*lw.weight) +
                            (ok ? " (matches the claim)" : " (contradicts the claim)"));
        } else {
            notes.push_back(std::string("low-weight search on the dual: no codeword of weight <= 4") +
                            (hi <= 4 ? " (contradicts the claim)" : ""));
        }
    } catch (const Error& e) {
        notes.push_back(std::string("low-weight search on the dual skipped: ") + e.what());
    }
}

}  // namespace

Json json_number(u64 v) {
    if (v > kExactJsonLimit) return std::to_string(v);
    return v;
}

Json json_number(i128 v) {
    if (v > static_cast<i128>(kExactJsonLimit) || v < -static_cast<i128>(kExactJsonLimit)) return to_string(v);
    return static_cast<std::int64_t>(v);
}

ParamsReport params_report(const FamilyParams& fp, u64 delta, u64 b, const ReportOptions& opts) {
    const CosetPartition part(fp.context(), opts.budgets);
    return params_report(fp, part, delta, b, opts);
}

ParamsReport params_report(const FamilyParams& fp, const CosetPartition& part, u64 delta, u64 b,
                           const ReportOptions& opts) {
    ParamsReport r;
    r.family = fp.family;
    r.q = fp.q;
    r.m = fp.m();
    r.s = fp.s();
    r.n = fp.n();
    r.b = b;
    r.delta = delta;

    BchCode code = make_code(part, delta, b, fp.family);
    r.dim_oracle = code.dimension;
    r.dual_dim = code.defining_set.size();
    r.bose = bose_distance(code.defining_set);

    if (b == 1) {
        try {
            const auto f = dimension_closed_form(fp.family, fp.q, fp.param, delta);
            if (f.covered()) {
                r.dim_formula = f->k;
                r.formula_id = f->formula_id;
                if (f->k != r.dim_oracle) {
                    r.notes.push_back("closed form " + f->formula_id + " gives k = " + std::to_string(f->k) +
                                      " but the defining set gives " + std::to_string(r.dim_oracle));
                }
            }
        } catch (const Error& e) {
            r.notes.push_back(std::string("dimension closed form failed: ") + e.what());
        }
    }

    r.dually_bch_direct = is_dually_bch_direct(part, code.defining_set).verdict;
    try {
        const auto c = dually_bch_closed_form(fp.family, fp.q, fp.param, delta, b);
        if (c.covered()) r.dually_bch_formula = c->value;
    } catch (const Error& e) {
        r.notes.push_back(std::string("dually-BCH closed form failed: ") + e.what());
    }

    std::optional<FieldTower> tower;
    if (code.dimension == 0) {
        r.notes.push_back("the code is {0}; distance fields are null");
    } else {
        r.d_lower = r.bose;
        if (b == 1) {
            if (auto d = divisor_multiple_distance(fp.q, r.n, delta)) {
                r.d_exact = *d;
                r.notes.push_back("delta is a multiple a*d_b with d_b | n/(q-1), so d = delta");
                if (r.bose > *d) r.notes.push_back("Bose distance exceeds the divisor-multiple distance");
            }
        }
        if (!r.d_exact && opts.exhaustive) {
            try {
                tower = build_tower_for(fp.q, static_cast<unsigned>(part.context().m));
                r.d_exact = exhaustive_min_distance(code, *tower, opts.budgets).distance;
                r.notes.push_back("minimum distance from a full codeword sweep");
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BudgetExceeded) throw;
            }
        }
        const u64 sp = sphere_packing_max_d(r.n, code.dimension, fp.q);
        if (r.d_exact) {
            r.d_lower = r.d_upper = r.d_exact;
            if (*r.d_exact > sp) r.notes.push_back("exact distance exceeds the Hamming bound");
        } else {
            r.d_upper = sp;
        }
    }
    top_band_notes(fp, part, code, opts, tower, r.notes);
    return r;
}

const std::vector<std::string>& params_report_fields() {
    static const std::vector<std::string> f{"family",     "q",     "m",        "s",          "n",
                                            "b",          "delta", "dim_oracle", "dim_formula", "formula_id",
                                            "bose",       "d_lower", "d_upper", "d_exact",    "dually_bch_direct",
                                            "dually_bch_formula", "dual_dim", "notes"};
    return f;
}

Json to_json(const ParamsReport& r) {
    auto opt = [](const auto& o) -> Json {
        if (!o) return nullptr;
        using V = std::decay_t<decltype(*o)>;
        if constexpr (std::is_same_v<V, u64>) return json_number(*o);
        else return Json(*o);
    };
    Json j;
    j["family"] = family_name(r.family);
    j["q"] = json_number(r.q);
    j["m"] = r.m;
    j["s"] = r.s ? Json(*r.s) : Json(nullptr);
    j["n"] = json_number(r.n);
    j["b"] = json_number(r.b);
    j["delta"] = json_number(r.delta);
    j["dim_oracle"] = json_number(r.dim_oracle);
    j["dim_formula"] = opt(r.dim_formula);
    j["formula_id"] = opt(r.formula_id);
    j["bose"] = json_number(r.bose);
    j["d_lower"] = opt(r.d_lower);
    j["d_upper"] = opt(r.d_upper);
    j["d_exact"] = opt(r.d_exact);
    j["dually_bch_direct"] = opt(r.dually_bch_direct);
    j["dually_bch_formula"] = opt(r.dually_bch_formula);
    j["dual_dim"] = json_number(r.dual_dim);
    j["notes"] = r.notes;
    return j;
}

std::vector<std::string> tsv_cells(const ParamsReport& r) {
    const Json j = to_json(r);
    std::vector<std::string> out;
    for (const auto& key : params_report_fields()) {
        const Json& v = j.at(key);
        if (v.is_null()) {
            out.emplace_back("");
        } else if (v.is_string()) {
            out.push_back(v.get<std::string>());
        } else if (v.is_array()) {
            std::string cell;
            for (const auto& x : v) cell += (cell.empty() ? "" : "; ") + x.get<std::string>();
            out.push_back(cell);
        } else {
            out.push_back(v.dump());
        }
    }
    return out;
}

}  // namespace bch_atlas
