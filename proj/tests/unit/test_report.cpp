#include <doctest.h>

#include <functional>

#include "bch_atlas/report.hpp"

using namespace bch_atlas;

TEST_CASE("report fields come out in the fixed order") {
    const auto fp = FamilyParams::make(Family::AntiPrimitive, 2, 4);
    const auto r = params_report(fp, 9, 1);
    const Json j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == params_report_fields());
    CHECK(j["dim_oracle"] == 53);
    CHECK(j["dim_formula"] == 53);
    CHECK(j["bose"] == 9);
    CHECK(j["s"] == 4);
    CHECK(j["m"] == 8);
    CHECK(j["d_exact"].is_null());
    CHECK(j["dual_dim"] == 32);
}

TEST_CASE("serialization round trips byte for byte") {
    const auto fp = FamilyParams::make(Family::Projective, 4, 5);
    const std::string once = to_json(params_report(fp, 229, 1)).dump();
    CHECK(Json::parse(once).dump() == once);
    std::function<bool(const Json&)> no_float = [&](const Json& j) {
        if (j.is_number_float()) return false;
        if (!j.is_structured()) return true;
        for (const auto& x : j) {
            if (!no_float(x)) return false;
        }
        return true;
    };
    CHECK(no_float(Json::parse(once)));
}

TEST_CASE("large numbers become strings") {
    CHECK(json_number(u64{1} << 53) == Json(u64{1} << 53));
    CHECK(json_number((u64{1} << 53) + 1) == Json("9007199254740993"));
    CHECK(json_number(static_cast<i128>(-5)) == Json(-5));
}

TEST_CASE("exact distance when the sweep is feasible") {
    const auto fp = FamilyParams::make(Family::AntiPrimitive, 2, 5);
    const auto r = params_report(fp, 149, 1);
    CHECK(r.d_exact == 149);
    CHECK(r.d_lower == 149);
    CHECK(r.d_upper == 149);
    CHECK(r.dim_formula == 16);
    // the top-band note reports the claimed dual window and what the search found
    bool window = false, search = false;
    for (const auto& n : r.notes) {
        window |= n.rfind("dual distance claimed [3,4]", 0) == 0;
        search |= n.find("low-weight search on the dual: d = 4") != std::string::npos;
    }
    CHECK(window);
    CHECK(search);
}

TEST_CASE("divisor-multiple distance and the repetition code") {
    const auto fp = FamilyParams::make(Family::AntiPrimitive, 2, 5);
    ReportOptions o;
    o.exhaustive = false;
    const auto r = params_report(fp, 31, 1, o);
    CHECK(r.dim_oracle == 206);
    CHECK(r.d_exact == 31);
    const auto rep = params_report(FamilyParams::make(Family::Primitive, 2, 4), 15, 1);
    CHECK(rep.dim_oracle == 1);
    CHECK(rep.d_exact == 15);
}

TEST_CASE("tsv cells") {
    const auto r = params_report(FamilyParams::make(Family::Primitive, 2, 4), 5, 1);
    const auto cells = tsv_cells(r);
    CHECK(cells.size() == params_report_fields().size());
    CHECK(cells[0] == "primitive");
    CHECK(cells[3] == "");
}
