#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bch_atlas/codes.hpp"
#include "bch_atlas/distance.hpp"
#include "bch_atlas/leaders.hpp"
#include "bch_atlas/report.hpp"
#include "bch_atlas/verify.hpp"

namespace py = pybind11;
using namespace bch_atlas;

namespace {

FamilyParams params(const std::string& family, u64 q, unsigned param) {
    return FamilyParams::make(parse_family(family), q, param);
}

py::object loads(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Budgets budgets(std::optional<u64> max_enum, std::optional<u64> max_codewords) {
    Budgets b = Budgets::from_environment();
    if (max_enum) b.max_enum = *max_enum;
    if (max_codewords) b.max_codewords = *max_codewords;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "BCH codes over GF(q): coset leaders, dimensions, dual codes, distances";

    static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, e.what());
        }
    });

    m.def("family_length", [](const std::string& family, u64 q, unsigned param) { return params(family, q, param).n(); },
          py::arg("family"), py::arg("q"), py::arg("param"));

    m.def(
        "cosets",
        [](u64 q, u64 n) {
            std::vector<std::pair<u64, u64>> out;
            const CosetPartition part(CosetContext::make(q, n));
            for (const auto& e : part.leaders()) out.emplace_back(e.leader, e.size);
            return out;
        },
        py::arg("q"), py::arg("n"), "(leader, size) for every q-cyclotomic coset modulo n");

    m.def("coset", [](u64 q, u64 n, u64 t) { return coset_of(CosetContext::make(q, n), t).elements; }, py::arg("q"),
          py::arg("n"), py::arg("t"));

    m.def(
        "largest_leaders",
        [](u64 q, u64 n, u64 k, std::optional<u64> max_enum) {
            std::vector<std::pair<u64, u64>> out;
            for (const auto& e : k_largest_leaders(CosetContext::make(q, n), k, budgets(max_enum, std::nullopt))) {
                out.emplace_back(e.leader, e.size);
            }
            return out;
        },
        py::arg("q"), py::arg("n"), py::arg("k"), py::arg("max_enum") = py::none());

    m.def(
        "leader_formula",
        [](const std::string& family, u64 q, unsigned param, unsigned rank) -> py::object {
            const Family f = parse_family(family);
            std::optional<LeaderResult> r;
            if (f == Family::Primitive) {
                r = primitive_delta(q, param, rank);
            } else if (f == Family::AntiPrimitive) {
                const auto c = anti_delta(q, param, rank);
                if (c.covered()) r = c.value();
            } else if (rank == 1) {
                r = proj_delta1(q, param);
            } else if (rank == 2) {
                const auto c = proj_delta2(q, param);
                if (c.covered()) r = c.value();
            }
            if (!r) return py::none();
            return py::make_tuple(r->value, r->coset_size, r->provenance);
        },
        py::arg("family"), py::arg("q"), py::arg("param"), py::arg("rank"),
        "(leader, coset size, provenance), or None where no closed form applies");

    m.def(
        "dimension",
        [](const std::string& family, u64 q, unsigned param, u64 delta, u64 b) {
            const auto fp = params(family, q, param);
            return make_code(CosetPartition(fp.context()), delta, b).dimension;
        },
        py::arg("family"), py::arg("q"), py::arg("param"), py::arg("delta"), py::arg("b") = 1);

    m.def(
        "dimension_formula",
        [](const std::string& family, u64 q, unsigned param, u64 delta) -> py::object {
            const auto f = dimension_closed_form(parse_family(family), q, param, delta);
            if (!f.covered()) return py::none();
            return py::make_tuple(f->k, f->formula_id);
        },
        py::arg("family"), py::arg("q"), py::arg("param"), py::arg("delta"));

    m.def(
        "generator",
        [](const std::string& family, u64 q, unsigned param, u64 delta, u64 b) {
            const auto fp = params(family, q, param);
            const CosetPartition part(fp.context());
            auto code = make_code(part, delta, b);
            attach_generator(code, build_tower_for(q, static_cast<unsigned>(part.context().m)));
            return code.generator->coeffs();
        },
        py::arg("family"), py::arg("q"), py::arg("param"), py::arg("delta"), py::arg("b") = 1,
        "generator polynomial coefficients, lowest degree first, as integer codes");

    m.def(
        "dually_bch",
        [](const std::string& family, u64 q, unsigned param, u64 delta, u64 b) {
            const auto fp = params(family, q, param);
            const CosetPartition part(fp.context());
            const bool direct = is_dually_bch_direct(part, defining_set(part, delta, b)).verdict;
            const auto c = dually_bch_closed_form(fp.family, q, param, delta, b);
            return py::make_tuple(direct, c.covered() ? py::cast(c->value) : py::none());
        },
        py::arg("family"), py::arg("q"), py::arg("param"), py::arg("delta"), py::arg("b") = 1,
        "(direct verdict, closed-form verdict or None)");

    m.def(
        "min_distance",
        [](const std::string& family, u64 q, unsigned param, u64 delta, u64 b, std::optional<u64> max_codewords) {
            const auto fp = params(family, q, param);
            const CosetPartition part(fp.context());
            const auto code = make_code(part, delta, b);
            const auto tower = build_tower_for(q, static_cast<unsigned>(part.context().m));
            return exhaustive_min_distance(code, tower, budgets(std::nullopt, max_codewords)).distance;
        },
        py::arg("family"), py::arg("q"), py::arg("param"), py::arg("delta"), py::arg("b") = 1,
        py::arg("max_codewords") = py::none());

    m.def(
        "params_report",
        [](const std::string& family, u64 q, unsigned param, u64 delta, u64 b, bool exhaustive) {
            ReportOptions o;
            o.budgets = Budgets::from_environment();
            o.exhaustive = exhaustive;
            return loads(to_json(params_report(params(family, q, param), delta, b, o)));
        },
        py::arg("family"), py::arg("q"), py::arg("param"), py::arg("delta"), py::arg("b") = 1,
        py::arg("exhaustive") = true);

    m.def(
        "verify",
        [](const std::string& suite, unsigned threads) {
            VerifyOptions o;
            o.budgets = Budgets::from_environment();
            o.threads = threads;
            SuiteReport r;
            {
                py::gil_scoped_release release;
                r = run_suite(suite, o);
            }
            return loads(to_json(r));
        },
        py::arg("suite"), py::arg("threads") = 0);

    m.def("suite_names", &suite_names);
}
