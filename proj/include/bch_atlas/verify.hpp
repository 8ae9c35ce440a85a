#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bch_atlas/cosets.hpp"
#include "bch_atlas/report.hpp"

namespace bch_atlas {

struct CaseRecord {
    std::string id;
    Json inputs;
    Json formula;
    Json oracle;
    std::optional<bool> agree;  // nullopt: skipped
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseRecord> cases;
    u64 total = 0, agree = 0, disagree = 0, skipped = 0;
};

struct VerifyOptions {
    Budgets budgets;
    unsigned threads = 0;  // 0: BCH_ATLAS_THREADS, else hardware concurrency
};

const std::vector<std::string>& suite_names();

// InvalidArgument for an unknown suite. Per-case errors become skipped records.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});

Json to_json(const SuiteReport& r);
// suite, id, inputs, formula, oracle, status, note
std::vector<std::vector<std::string>> tsv_rows(const SuiteReport& r);

unsigned resolve_threads(unsigned requested);

}  // namespace bch_atlas
