#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bch_atlas/codes.hpp"
#include "bch_atlas/cosets.hpp"
#include "bch_atlas/family.hpp"

namespace bch_atlas {

using Json = nlohmann::ordered_json;

// Plain integer up to 2^53, decimal string above it.
Json json_number(u64 v);
Json json_number(i128 v);

struct ParamsReport {
    Family family = Family::Primitive;
    u64 q = 0;
    unsigned m = 0;
    std::optional<unsigned> s;
    u64 n = 0;
    u64 b = 1;
    u64 delta = 2;
    u64 dim_oracle = 0;
    std::optional<u64> dim_formula;
    std::optional<std::string> formula_id;
    u64 bose = 0;
    std::optional<u64> d_lower, d_upper, d_exact;
    std::optional<bool> dually_bch_direct;
    std::optional<bool> dually_bch_formula;
    u64 dual_dim = 0;
    std::vector<std::string> notes;
};

struct ReportOptions {
    Budgets budgets;
    bool exhaustive = true;   // run the codeword sweep when q^k fits the budget
    bool dual_window = true;  // low-weight search on the dual for top-band codes
};

ParamsReport params_report(const FamilyParams& fp, u64 delta, u64 b, const ReportOptions& opts = {});
// Same, reusing a partition built by the caller.
ParamsReport params_report(const FamilyParams& fp, const CosetPartition& part, u64 delta, u64 b,
                           const ReportOptions& opts = {});

Json to_json(const ParamsReport& r);
// Field names in serialization order.
const std::vector<std::string>& params_report_fields();
// One TSV cell per field; arrays joined by "; ".
std::vector<std::string> tsv_cells(const ParamsReport& r);

}  // namespace bch_atlas
