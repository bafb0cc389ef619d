#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "graphsym/claims.hpp"
#include "graphsym/graph6.hpp"

using namespace graphsym;

namespace {

Limits tiny_limits() {
    Limits lim;
    lim.max_n = 5;
    lim.max_k = 2;
    return lim;
}

std::set<std::string> verdict_instances(const std::vector<ClaimRecord>& records,
                                        const std::string& verdict) {
    std::set<std::string> out;
    for (const auto& r : records)
        if (r.verdict == verdict) out.insert(r.claim + "|" + r.instance);
    return out;
}

}  // namespace

TEST_CASE("registry covers the expected claim ids exactly once") {
    const std::set<std::string> expected = {
        "L2.i",    "L2.ii",    "L2.iii",  "T2.2.i",  "T2.2.ii", "C2.3.i",  "C2.3.ii",
        "T2.4",    "C2.5",     "R2.6",    "T2.7",    "C2.8",    "C2.9",    "T2.10",
        "C2.11.i", "C2.11.ii", "C2.12",   "CONJ.i",  "CONJ.ii", "L3.1",    "O3.2",
        "F3.3",    "C3.4.i",   "C3.4.ii", "T3.6",    "T3.7",    "T3.8",    "T3.9",
        "F4.0",    "T4.1",     "T4.2",    "T4.3",    "C4.4",    "C4.5.i",  "C4.5.ii"};
    auto ids = claim_ids();
    std::set<std::string> got(ids.begin(), ids.end());
    CHECK(got == expected);
    CHECK(ids.size() == expected.size());  // no duplicates

    CHECK(claim_is_report_only("CONJ.i"));
    CHECK(claim_is_report_only("CONJ.ii"));
    CHECK_FALSE(claim_is_report_only("L2.i"));
}

TEST_CASE("unknown claim ids are rejected before any work") {
    CHECK_THROWS_AS(run_claims({"NOPE"}, tiny_limits()), std::invalid_argument);
    CHECK_THROWS_AS(run_claims({"L2.i", "bogus"}, tiny_limits()), std::invalid_argument);
}

TEST_CASE("claim selection and record ordering") {
    auto records = run_claims({"L2.i", "F3.3"}, tiny_limits());
    CHECK(!records.empty());
    for (std::size_t i = 1; i < records.size(); ++i) {
        auto a = std::tie(records[i - 1].claim, records[i - 1].instance);
        auto b = std::tie(records[i].claim, records[i].instance);
        CHECK(a <= b);
    }
    for (const auto& r : records) {
        bool known = r.claim == "L2.i" || r.claim == "F3.3";
        CHECK(known);
        CHECK(r.verdict == "PASS");
    }
}

TEST_CASE("determinism: identical runs produce identical reports") {
    Limits lim = tiny_limits();
    auto r1 = run_claims({"L2.ii", "T3.8", "T2.10"}, lim);
    auto r2 = run_claims({"L2.ii", "T3.8", "T2.10"}, lim);
    auto j1 = report_to_json(r1, lim).dump(2);
    auto j2 = report_to_json(r2, lim).dump(2);
    CHECK(j1 == j2);
}

TEST_CASE("pinned distance-formula failures: exactly d mod k >= 2") {
    Limits lim;
    lim.max_n = 8;
    auto records = run_claims({"L2.iii"}, lim);
    for (const auto& r : records) {
        // instance format: g=<g6>;k=<k>;x=0;y=<d>
        auto kpos = r.instance.find(";k=");
        auto ypos = r.instance.find(";y=");
        int k = std::stoi(r.instance.substr(kpos + 3));
        int d = std::stoi(r.instance.substr(ypos + 3));
        CHECK(r.verdict == ((d % k >= 2) ? "FAIL" : "PASS"));
    }
}

TEST_CASE("pinned cycle-power automorphism failures at n = 2k+1 and n = 2k+2") {
    Limits lim;
    lim.max_n = 8;
    lim.max_k = 3;
    auto records = run_claims({"T2.10"}, lim);
    std::set<std::string> fails = verdict_instances(records, "FAIL");
    std::set<std::string> expected = {
        "T2.10|g=" + graph6_write(cycle_graph(5)) + ";k=2",
        "T2.10|g=" + graph6_write(cycle_graph(6)) + ";k=2",
        "T2.10|g=" + graph6_write(cycle_graph(7)) + ";k=3",
        "T2.10|g=" + graph6_write(cycle_graph(8)) + ";k=3",
    };
    CHECK(fails == expected);
}

TEST_CASE("pinned path-power formula failures: exactly k > radius") {
    Limits lim;
    lim.max_n = 7;
    auto records = run_claims({"T2.7"}, lim);
    int fail_count = 0;
    for (const auto& r : records) {
        Graph g = graph6_read(r.instance.substr(2, r.instance.find(";k=") - 2));
        int n = g.vertex_count();
        int k = std::stoi(r.instance.substr(r.instance.find(";k=") + 3));
        bool expect_fail = k > n / 2;
        CHECK(r.verdict == (expect_fail ? "FAIL" : "PASS"));
        if (expect_fail) ++fail_count;
    }
    CHECK(fail_count == 8);  // n=4:1, n=5:2, n=6:2, n=7:3
}

TEST_CASE("report JSON schema and markdown rendering") {
    Limits lim = tiny_limits();
    auto records = run_claims({"F3.3"}, lim);
    Json report = report_to_json(records, lim);
    CHECK(report.contains("meta"));
    CHECK(report["meta"].contains("seed"));
    CHECK(report["meta"].contains("limits"));
    CHECK(report["meta"].contains("version"));
    CHECK(report.contains("records"));
    for (const auto& r : report["records"]) {
        CHECK(r.contains("claim"));
        CHECK(r.contains("instance"));
        CHECK(r.contains("expected"));
        CHECK(r.contains("computed"));
        CHECK(r.contains("verdict"));
    }
    std::string md = report_to_markdown(report);
    CHECK(md.find("| F3.3 |") != std::string::npos);
    CHECK(report_to_markdown(report) == md);  // pure function
}

TEST_CASE("skips carry reasons") {
    Limits lim = tiny_limits();  // max_n = 5 < 7
    auto records = run_claims({"C2.5"}, lim);
    REQUIRE(records.size() == 1);
    CHECK(records[0].verdict == "SKIP");
    CHECK_FALSE(records[0].reason.empty());
}

TEST_CASE("budget exhaustion turns into SKIP records, not wrong answers") {
    Limits lim = tiny_limits();
    lim.budget = 3;
    auto records = run_claims({"C2.3.i"}, lim);
    CHECK(!records.empty());
    for (const auto& r : records) {
        CHECK(r.verdict == "SKIP");
        CHECK(r.reason.find("budget") != std::string::npos);
    }
}
