#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bch_atlas/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bch_atlas::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json parse(const Result& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("leaders example") {
    const auto r = run({"leaders", "--family", "anti", "--q", "2", "--s", "5", "--k", "2"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["oracle"][0]["leader"] == 165);
    CHECK(j["oracle"][1]["leader"] == 149);
    CHECK(j["formula"][1]["leader"] == 149);
}

TEST_CASE("code example") {
    const auto r = run({"code", "--family", "anti", "--q", "2", "--s", "4", "--delta", "9"});
    REQUIRE(r.code == 0);
    CHECK(parse(r)["dim_oracle"] == 53);
}

TEST_CASE("dually-bch example") {
    const auto r = run({"dually-bch", "--family", "primitive", "--q", "2", "--m", "6", "--b", "1", "--delta", "4"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["direct"] == false);
    CHECK(j["formula"] == false);
    CHECK(j["agree"] == true);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nope"}).code == 2);
    CHECK(run({"leaders", "--family", "anti", "--q", "2", "--m", "5"}).code == 2);
    CHECK(run({"leaders", "--family", "primitive", "--q", "6", "--m", "3"}).code == 2);
    CHECK(run({"code", "--family", "primitive", "--q", "2", "--m", "4"}).code == 2);
    CHECK(run({"code", "--family", "primitive", "--q", "2", "--m", "4", "--delta", "99"}).code == 2);
    CHECK(run({"verify", "--suite", "unknown"}).code == 2);
    CHECK(run({"code", "--family", "primitive", "--q", "2", "--m", "4", "--delta", "5", "--format", "xml"}).code == 2);
    const auto budget = run({"cosets", "--family", "primitive", "--q", "2", "--m", "12", "--max-enum", "10"});
    CHECK(budget.code == 2);
    CHECK(budget.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    const auto ok = run({"verify", "--suite", "tilde-dual"});
    CHECK(ok.code == 0);
    CHECK(parse(ok)["suite"] == "tilde-dual");
    // the second-leader formula at (q, s) = (3, 4) disagrees with enumeration
    const auto bad = run({"verify", "--suite", "leaders-anti"});
    CHECK(bad.code == 1);
    CHECK(parse(bad)["summary"]["disagree"].get<int>() > 0);
}

TEST_CASE("tsv output") {
    const auto r = run({"cosets", "--q", "2", "--n", "15", "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "leader\tsize\n0\t1\n1\t4\n3\t4\n5\t2\n7\t4\n");
    const auto t = run({"table", "--family", "primitive", "--q", "2", "--m", "4", "--from", "3", "--to", "5",
                        "--format", "tsv"});
    REQUIRE(t.code == 0);
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 4);
    CHECK(t.out.rfind("family\tq\tm\ts\tn\tb\tdelta\tdim_oracle", 0) == 0);
}

TEST_CASE("table json is an array of reports") {
    const auto r = run({"table", "--family", "projective", "--q", "4", "--m", "5", "--from", "228", "--to", "233"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    REQUIRE(j.size() == 6);
    CHECK(j[1]["delta"] == 229);
    CHECK(j[1]["dim_oracle"] == 11);
    CHECK(j[5]["dim_oracle"] == 6);
}

TEST_CASE("distance and dual subcommands") {
    const auto d = run({"distance", "--family", "primitive", "--q", "2", "--m", "4", "--delta", "7", "--dual"});
    REQUIRE(d.code == 0);
    const auto j = parse(d);
    CHECK(j["exhaustive"]["distance"] == 7);
    CHECK(j["bose"] == 7);
    CHECK(j["dual_low_weight"].contains("weight"));
    const auto du = run({"dual", "--family", "primitive", "--q", "2", "--m", "4", "--delta", "5"});
    REQUIRE(du.code == 0);
    CHECK(parse(du)["defining_set_leaders"] == nlohmann::ordered_json::array({1, 3}));
    CHECK(parse(du)["dual_dim"] == 8);
}

TEST_CASE("generator output") {
    const auto r = run({"code", "--family", "primitive", "--q", "2", "--m", "4", "--delta", "3", "--generator"});
    REQUIRE(r.code == 0);
    CHECK(parse(r)["generator"] == nlohmann::ordered_json::array({1, 1, 0, 0, 1}));
}
