#include "bch_atlas/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "bch_atlas/codes.hpp"
#include "bch_atlas/distance.hpp"
#include "bch_atlas/family.hpp"
#include "bch_atlas/leaders.hpp"
#include "bch_atlas/report.hpp"
#include "bch_atlas/verify.hpp"

namespace bch_atlas::cli {

namespace {

struct Common {
    std::string family;
    u64 q = 0;
    std::optional<unsigned> m, s;
    std::string format = "json";
    std::optional<u64> max_enum, max_codewords, max_syndromes;

    Budgets budgets() const {
        Budgets b = Budgets::from_environment();
        if (max_enum) b.max_enum = *max_enum;
        if (max_codewords) b.max_codewords = *max_codewords;
        if (max_syndromes) b.max_syndromes = *max_syndromes;
        return b;
    }

    FamilyParams params() const {
        if (family.empty()) throw Error(ErrorKind::InvalidArgument, "--family is required");
        const Family f = parse_family(family);
        if (q == 0) throw Error(ErrorKind::InvalidArgument, "--q is required");
        if (f == Family::AntiPrimitive) {
            if (m || !s) throw Error(ErrorKind::InvalidArgument, "the anti family takes --s and not --m");
            return FamilyParams::make(f, q, *s);
        }
        if (s || !m) throw Error(ErrorKind::InvalidArgument, std::string(family_name(f)) + " takes --m and not --s");
        return FamilyParams::make(f, q, *m);
    }
};

void add_family(CLI::App* app, Common& c) {
    app->add_option("--family", c.family, "primitive | anti | projective");
    app->add_option("--q", c.q, "field size, a prime power");
    app->add_option("--m", c.m, "extension degree (primitive, projective)");
    app->add_option("--s", c.s, "half degree, n = (q^(2s) - 1)/(q + 1) (anti)");
}

void add_output(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
    app->add_option("--max-enum", c.max_enum, "coset enumeration budget (n*m steps)");
    app->add_option("--max-codewords", c.max_codewords, "exhaustive distance budget");
    app->add_option("--max-syndromes", c.max_syndromes, "low-weight search budget");
}

Json header(const FamilyParams& fp) {
    Json j;
    j["family"] = family_name(fp.family);
    j["q"] = json_number(fp.q);
    j["m"] = fp.m();
    j["s"] = fp.s() ? Json(*fp.s()) : Json(nullptr);
    j["n"] = json_number(fp.n());
    return j;
}

Json leader_list(const std::vector<u64>& xs) {
    Json a = Json::array();
    for (u64 x : xs) a.push_back(json_number(x));
    return a;
}

std::string cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void write_tsv(std::ostream& out, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
        out << '\n';
    };
    line(head);
    for (const auto& r : rows) line(r);
}

// Flat object to one TSV row.
void write_object_tsv(std::ostream& out, const Json& j) {
    std::vector<std::string> head, row;
    for (const auto& [k, v] : j.items()) {
        head.push_back(k);
        row.push_back(cell(v));
    }
    write_tsv(out, head, {row});
}

Json leader_formula(const FamilyParams& fp, unsigned rank) {
    Json j;
    j["rank"] = rank;
    auto put = [&](const LeaderResult& r) {
        j["leader"] = json_number(r.value);
        j["size"] = json_number(r.coset_size);
        j["provenance"] = r.provenance;
    };
    auto gap = [&](const std::string& why) {
        j["leader"] = nullptr;
        j["size"] = nullptr;
        j["provenance"] = nullptr;
        j["unsupported"] = why;
    };
    try {
        switch (fp.family) {
            case Family::Primitive:
                if (rank > primitive_max_rank(fp.m())) {
                    gap("rank above the closed-form range " + std::to_string(primitive_max_rank(fp.m())));
                } else {
                    put(primitive_delta(fp.q, fp.m(), rank));
                }
                break;
            case Family::AntiPrimitive: {
                if (rank > 2) {
                    gap("closed forms cover ranks 1 and 2");
                    break;
                }
                const auto r = anti_delta(fp.q, fp.param, rank);
                if (r.covered()) put(r.value());
                else gap(r.gap().reason);
                break;
            }
            case Family::Projective:
                if (rank == 1) {
                    put(proj_delta1(fp.q, fp.m()));
                } else if (rank == 2) {
                    const auto r = proj_delta2(fp.q, fp.m());
                    if (r.covered()) put(r.value());
                    else gap(r.gap().reason);
                } else {
                    gap("closed forms cover ranks 1 and 2");
                }
                break;
        }
    } catch (const Error& e) {
        gap(e.what());
    }
    return j;
}

struct Args {
    Common c;
    u64 delta = 2, b = 1, k = 2;
    std::optional<u64> n;
    std::string source = "both";
    bool elements = false, generator = false, exhaustive = false, no_exhaustive = false, dual = false;
    unsigned wmax = 4;
    std::vector<std::string> suites;
    unsigned threads = 0;
    std::optional<u64> delta_from, delta_to;
};

int cmd_cosets(const Args& a, std::ostream& out) {
    CosetContext ctx;
    Json j;
    if (a.n) {
        if (!a.c.family.empty()) throw Error(ErrorKind::InvalidArgument, "give either --n or --family");
        ctx = CosetContext::make(a.c.q, *a.n);
        j["q"] = json_number(ctx.q);
        j["n"] = json_number(ctx.n);
        j["m"] = json_number(ctx.m);
    } else {
        const auto fp = a.c.params();
        ctx = fp.context();
        j = header(fp);
    }
    const CosetPartition part(ctx, a.c.budgets());
    if (a.c.format == "tsv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& e : part.leaders()) {
            std::vector<std::string> r{std::to_string(e.leader), std::to_string(e.size)};
            if (a.elements) {
                std::string el;
                for (u64 x : coset_of(ctx, e.leader).elements) el += (el.empty() ? "" : ",") + std::to_string(x);
                r.push_back(el);
            }
            rows.push_back(std::move(r));
        }
        std::vector<std::string> head{"leader", "size"};
        if (a.elements) head.push_back("elements");
        write_tsv(out, head, rows);
        return 0;
    }
    Json list = Json::array();
    for (const auto& e : part.leaders()) {
        Json c;
        c["leader"] = json_number(e.leader);
        c["size"] = json_number(e.size);
        if (a.elements) c["elements"] = leader_list(coset_of(ctx, e.leader).elements);
        list.push_back(std::move(c));
    }
    j["count"] = json_number(static_cast<u64>(part.count()));
    j["cosets"] = std::move(list);
    out << j.dump() << '\n';
    return 0;
}

int cmd_leaders(const Args& a, std::ostream& out) {
    const auto fp = a.c.params();
    if (a.k == 0) throw Error(ErrorKind::InvalidArgument, "--k must be positive");
    const bool want_oracle = a.source != "formula", want_formula = a.source != "oracle";
    std::vector<LeaderEntry> oracle;
    if (want_oracle) oracle = k_largest_leaders(fp.context(), a.k, a.c.budgets());
    std::vector<Json> formula;
    if (want_formula) {
        for (unsigned r = 1; r <= a.k; ++r) formula.push_back(leader_formula(fp, r));
    }
    if (a.c.format == "tsv") {
        std::vector<std::vector<std::string>> rows;
        for (unsigned r = 1; r <= a.k; ++r) {
            std::vector<std::string> row{std::to_string(r)};
            if (want_oracle) {
                row.push_back(r <= oracle.size() ? std::to_string(oracle[r - 1].leader) : "");
                row.push_back(r <= oracle.size() ? std::to_string(oracle[r - 1].size) : "");
            }
            if (want_formula) {
                const Json& f = formula[r - 1];
                row.push_back(cell(f["leader"]));
                row.push_back(cell(f["size"]));
                row.push_back(cell(f["provenance"]));
            }
            rows.push_back(std::move(row));
        }
        std::vector<std::string> head{"rank"};
        if (want_oracle) head.insert(head.end(), {"oracle_leader", "oracle_size"});
        if (want_formula) head.insert(head.end(), {"formula_leader", "formula_size", "provenance"});
        write_tsv(out, head, rows);
        return 0;
    }
    Json j = header(fp);
    if (want_oracle) {
        Json o = Json::array();
        for (const auto& e : oracle) {
            Json x;
            x["leader"] = json_number(e.leader);
            x["size"] = json_number(e.size);
            o.push_back(std::move(x));
        }
        j["oracle"] = std::move(o);
    }
    if (want_formula) j["formula"] = formula;
    out << j.dump() << '\n';
    return 0;
}

ReportOptions report_options(const Args& a, bool exhaustive_default) {
    ReportOptions o;
    o.budgets = a.c.budgets();
    o.exhaustive = a.no_exhaustive ? false : (a.exhaustive || exhaustive_default);
    return o;
}

int cmd_code(const Args& a, std::ostream& out) {
    const auto fp = a.c.params();
    const CosetPartition part(fp.context(), a.c.budgets());
    const auto r = params_report(fp, part, a.delta, a.b, report_options(a, true));
    Json j = to_json(r);
    if (a.generator) {
        auto code = make_code(part, a.delta, a.b, fp.family);
        const auto tower = build_tower_for(fp.q, static_cast<unsigned>(part.context().m));
        attach_generator(code, tower);
        Json g = Json::array();
        for (Code c : code.generator->coeffs()) g.push_back(json_number(static_cast<u64>(c)));
        j["generator"] = std::move(g);
    }
    if (a.c.format == "tsv") {
        write_object_tsv(out, [&] {
            Json flat = j;
            if (a.generator) flat["generator"] = j["generator"].dump();
            std::string notes;
            for (const auto& n : j["notes"]) notes += (notes.empty() ? "" : "; ") + n.get<std::string>();
            flat["notes"] = notes;
            return flat;
        }());
        return 0;
    }
    out << j.dump() << '\n';
    return 0;
}

int cmd_dual(const Args& a, std::ostream& out) {
    const auto fp = a.c.params();
    const CosetPartition part(fp.context(), a.c.budgets());
    const auto T = defining_set(part, a.delta, a.b);
    const auto perp = dualize(T);
    std::vector<u64> perp_leaders;
    for (u64 r : perp) {
        if (part.leader(part.id_of(r)) == r) perp_leaders.push_back(r);
    }
    Json j = header(fp);
    j["b"] = json_number(a.b);
    j["delta"] = json_number(a.delta);
    j["defining_set_leaders"] = leader_list(T.coset_leaders);
    j["dim"] = json_number(fp.n() - T.size());
    j["dual_defining_set_leaders"] = leader_list(perp_leaders);
    j["dual_dim"] = json_number(T.size());
    if (a.c.format == "tsv") {
        Json flat = j;
        flat["defining_set_leaders"] = j["defining_set_leaders"].dump();
        flat["dual_defining_set_leaders"] = j["dual_defining_set_leaders"].dump();
        write_object_tsv(out, flat);
        return 0;
    }
    out << j.dump() << '\n';
    return 0;
}

Json opt_number(const std::optional<u64>& v) { return v ? json_number(*v) : Json(nullptr); }

int cmd_dually(const Args& a, std::ostream& out) {
    const auto fp = a.c.params();
    const CosetPartition part(fp.context(), a.c.budgets());
    const auto T = defining_set(part, a.delta, a.b);
    const auto d = is_dually_bch_direct(part, T);
    Json j = header(fp);
    j["b"] = json_number(a.b);
    j["delta"] = json_number(a.delta);
    j["direct"] = d.verdict;
    j["zero_dual"] = d.zero_code;
    j["b_prime"] = opt_number(d.b_prime);
    j["delta_prime"] = opt_number(d.delta_prime);
    j["witness"] = opt_number(d.witness);
    Json formula = nullptr, formula_id = nullptr, unsupported = nullptr;
    try {
        const auto c = dually_bch_closed_form(fp.family, fp.q, fp.param, a.delta, a.b);
        if (c.covered()) formula = c->value, formula_id = c->formula_id;
        else unsupported = c.gap().reason;
    } catch (const Error& e) {
        unsupported = e.what();
    }
    j["formula"] = formula;
    j["formula_id"] = formula_id;
    j["unsupported"] = unsupported;
    j["agree"] = formula.is_null() ? Json(nullptr) : Json(formula.get<bool>() == d.verdict);
    if (a.c.format == "tsv") write_object_tsv(out, j);
    else out << j.dump() << '\n';
    return 0;
}

Json support_json(const std::vector<u64>& s) { return leader_list(s); }

int cmd_distance(const Args& a, std::ostream& out) {
    const auto fp = a.c.params();
    const Budgets budgets = a.c.budgets();
    const CosetPartition part(fp.context(), budgets);
    const auto code = make_code(part, a.delta, a.b, fp.family);
    const u64 n = fp.n();
    Json j = header(fp);
    j["b"] = json_number(a.b);
    j["delta"] = json_number(a.delta);
    j["k"] = json_number(code.dimension);
    j["bose"] = json_number(bose_distance(code.defining_set));
    j["hamming_bound"] = code.dimension ? json_number(sphere_packing_max_d(n, code.dimension, fp.q)) : Json(nullptr);
    j["divisor_multiple"] = a.b == 1 ? opt_number(divisor_multiple_distance(fp.q, n, a.delta)) : Json(nullptr);
    std::optional<FieldTower> tower;
    auto get_tower = [&]() -> const FieldTower& {
        if (!tower) tower = build_tower_for(fp.q, static_cast<unsigned>(part.context().m));
        return *tower;
    };
    Json ex;
    if (a.no_exhaustive || code.dimension == 0) {
        ex = nullptr;
    } else {
        try {
            const auto r = exhaustive_min_distance(code, get_tower(), budgets);
            ex["distance"] = json_number(r.distance);
            ex["codewords"] = json_number(r.codewords);
            ex["support"] = support_json(r.support);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            ex["skipped"] = e.what();
        }
    }
    j["exhaustive"] = ex;
    if (a.dual) {
        Json dj;
        try {
            std::vector<u64> rows;
            for (u64 r : dualize(code.defining_set)) {
                if (part.leader(part.id_of(r)) == r) rows.push_back(r);
            }
            const auto lw = low_weight_search(rows, get_tower(), n, a.wmax, budgets);
            dj["wmax"] = a.wmax;
            dj["weight"] = opt_number(lw.weight);
            dj["support"] = support_json(lw.support);
            Json co = Json::array();
            for (Code c : lw.coefficients) co.push_back(json_number(static_cast<u64>(c)));
            dj["coefficients"] = std::move(co);
            dj["budget_consumed"] = json_number(lw.budget_consumed);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded && e.kind() != ErrorKind::RedundancyTooLarge) throw;
            dj["skipped"] = e.what();
        }
        j["dual_low_weight"] = std::move(dj);
    }
    if (a.c.format == "tsv") {
        Json flat;
        for (const auto& [k, v] : j.items()) flat[k] = v.is_object() || v.is_array() ? Json(v.dump()) : v;
        write_object_tsv(out, flat);
    } else {
        out << j.dump() << '\n';
    }
    return 0;
}

int cmd_verify(const Args& a, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    for (const auto& s : a.suites) {
        if (s == "all") {
            for (const auto& x : suite_names()) names.push_back(x);
        } else {
            names.push_back(s);
        }
    }
    if (names.empty()) throw Error(ErrorKind::InvalidArgument, "--suite is required");
    const bool many = names.size() > 1 || a.suites[0] == "all";
    VerifyOptions o;
    o.budgets = a.c.budgets();
    o.threads = a.threads;
    std::vector<SuiteReport> reports;
    u64 disagree = 0;
    for (const auto& name : names) {
        reports.push_back(run_suite(name, o));
        const auto& r = reports.back();
        disagree += r.disagree;
        err << name << ": " << r.total << " cases, " << r.agree << " agree, " << r.disagree << " disagree, "
            << r.skipped << " skipped\n";
    }
    if (a.c.format == "tsv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : reports) {
            for (auto& row : tsv_rows(r)) rows.push_back(std::move(row));
        }
        write_tsv(out, {"suite", "id", "inputs", "formula", "oracle", "status", "note"}, rows);
    } else if (many) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump() << '\n';
    } else {
        out << to_json(reports[0]).dump() << '\n';
    }
    return disagree ? 1 : 0;
}

int cmd_table(const Args& a, std::ostream& out) {
    const auto fp = a.c.params();
    const CosetPartition part(fp.context(), a.c.budgets());
    const u64 n = fp.n();
    const u64 lo = a.delta_from.value_or(2), hi = a.delta_to.value_or(n - 1);
    if (lo < 2 || hi < lo || hi > n) throw Error(ErrorKind::DeltaOutOfRange, "need 2 <= from <= to <= n");
    ReportOptions o = report_options(a, false);
    o.dual_window = a.dual;
    std::vector<ParamsReport> rows;
    for (u64 d = lo; d <= hi; ++d) rows.push_back(params_report(fp, part, d, a.b, o));
    if (a.c.format == "tsv") {
        std::vector<std::vector<std::string>> cells;
        for (const auto& r : rows) cells.push_back(tsv_cells(r));
        write_tsv(out, params_report_fields(), cells);
        return 0;
    }
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    out << arr.dump() << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"BCH code parameters, coset leaders and closed-form checks", "bch-atlas"};
    app.require_subcommand(1);
    Args a;

    auto* cosets = app.add_subcommand("cosets", "list cyclotomic cosets and their leaders");
    add_family(cosets, a.c);
    cosets->add_option("--n", a.n, "arbitrary length coprime to q, instead of --family");
    cosets->add_flag("--elements", a.elements, "include coset elements");

    auto* leaders = app.add_subcommand("leaders", "k largest coset leaders by formula and by enumeration");
    add_family(leaders, a.c);
    leaders->add_option("--k", a.k, "how many leaders")->capture_default_str();
    leaders->add_option("--source", a.source, "formula | oracle | both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();

    auto add_code_opts = [&](CLI::App* s, bool need_delta) {
        add_family(s, a.c);
        auto* d = s->add_option("--delta", a.delta, "designed distance");
        if (need_delta) d->required();
        s->add_option("--b", a.b, "first exponent of the consecutive range")->capture_default_str();
    };

    auto* code = app.add_subcommand("code", "build a BCH code and report its parameters");
    add_code_opts(code, true);
    code->add_flag("--generator", a.generator, "include generator polynomial coefficient codes");
    code->add_flag("--no-exhaustive", a.no_exhaustive, "skip the codeword sweep");

    auto* dual = app.add_subcommand("dual", "defining sets of a code and its dual");
    add_code_opts(dual, true);

    auto* dually = app.add_subcommand("dually-bch", "is the dual again a BCH code: direct check and closed form");
    add_code_opts(dually, true);

    auto* distance = app.add_subcommand("distance", "distance bounds and oracles");
    add_code_opts(distance, true);
    distance->add_flag("--no-exhaustive", a.no_exhaustive, "skip the codeword sweep");
    distance->add_flag("--dual", a.dual, "low-weight search on the dual code");
    distance->add_option("--wmax", a.wmax, "largest weight for the dual search (2..4)")
        ->check(CLI::Range(2u, 4u))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "compare closed forms with enumeration over parameter grids");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("--suite", a.suites, "suite name or all")->required()->check(CLI::IsMember(choices));
    verify->add_option("--threads", a.threads, "worker threads (default BCH_ATLAS_THREADS or all cores)");

    auto* table = app.add_subcommand("table", "parameter reports over a range of designed distances");
    add_family(table, a.c);
    table->add_option("--b", a.b)->capture_default_str();
    table->add_option("--from", a.delta_from, "first delta (default 2)");
    table->add_option("--to", a.delta_to, "last delta (default n - 1)");
    table->add_flag("--exhaustive", a.exhaustive, "run codeword sweeps within budget");
    table->add_flag("--dual", a.dual, "low-weight search on duals in the top bands");

    for (auto* s : {cosets, leaders, code, dual, dually, distance, verify, table}) add_output(s, a.c);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        // help requests exit 0, everything else is a usage error
        if (app.exit(e, out, err) == 0) return 0;
        return 2;
    }

    try {
        if (*cosets) return cmd_cosets(a, out);
        if (*leaders) return cmd_leaders(a, out);
        if (*code) return cmd_code(a, out);
        if (*dual) return cmd_dual(a, out);
        if (*dually) return cmd_dually(a, out);
        if (*distance) return cmd_distance(a, out);
        if (*verify) return cmd_verify(a, out, err);
        if (*table) return cmd_table(a, out);
    } catch (const Error& e) {
        err << "bch-atlas: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "bch-atlas: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace bch_atlas::cli
