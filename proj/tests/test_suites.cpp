#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turanx/serialize.hpp"
#include "turanx/suites.hpp"

using namespace turanx;

namespace {

const SuiteRow* find_row(const SuiteReport& report, const std::string& needle) {
    for (const auto& row : report.rows)
        if (row.instance.find(needle) != std::string::npos) return &row;
    return nullptr;
}

} // namespace

TEST_CASE("zykov suite passes with unique Turan extremal graphs") {
    SuiteReport report = run_suite("zykov");
    CHECK(report.pass);
    CHECK(report.rows.size() == 4);
    const SuiteRow* n7 = find_row(report, "n=7");
    REQUIRE(n7 != nullptr);
    CHECK(n7->formula == "12");
    CHECK(n7->search_value == "12");
    CHECK(n7->extremal_unique == true);
    CHECK(n7->agree);
}

TEST_CASE("erdos-gallai suite: exact in-range, informational below threshold") {
    SuiteReport report = run_suite("erdos-gallai");
    CHECK(report.pass);
    const SuiteRow* r64 = find_row(report, "n=6 k=1");
    REQUIRE(r64 != nullptr);
    CHECK(r64->formula == "5"); // max{3, 5}
    CHECK(r64->search_value == "5");
    CHECK(r64->agree);
    CHECK_FALSE(r64->informational);

    // n=4, k=2 sits below the n >= 2k+1 validity bound: the formula row is
    // informational (and visibly disagrees); the pigeonhole row enforces
    // C(4,2) = 6.
    const SuiteRow* below = find_row(report, "n=4 k=2 pattern=3K2 pigeonhole");
    REQUIRE(below != nullptr);
    CHECK(below->agree);
    CHECK(below->search_value == "6");
    bool found_info = false;
    for (const auto& row : report.rows)
        if (row.informational && row.instance.find("n=4 k=2") != std::string::npos) {
            found_info = true;
            CHECK(row.formula == "10");
            CHECK_FALSE(row.agree); // the honest mismatch, reported not failed
        }
    CHECK(found_info);
}

TEST_CASE("kkr-smalln suite: dominance and coherence enforced") {
    SuiteReport report = run_suite("kkr-smalln");
    CHECK(report.pass);
    const SuiteRow* coherence = find_row(report, "r=3 k=1 coherence");
    REQUIRE(coherence != nullptr);
    CHECK(coherence->agree);
    // n=6, r=3, k=1: optimum strictly beats the construction value 6.
    const SuiteRow* n6 = find_row(report, "n=6 r=3 k=1");
    REQUIRE(n6 != nullptr);
    CHECK(n6->construction == "6");
    CHECK(n6->agree);
}

TEST_CASE("two-c5-degenerate suite") {
    SuiteReport report = run_suite("two-c5-degenerate");
    CHECK(report.pass);
    for (int n = 6; n <= 9; ++n) {
        const SuiteRow* row = find_row(report, "n=" + std::to_string(n) + " s=3");
        REQUIRE(row != nullptr);
        CHECK(row->agree);
        CHECK(row->extremal_unique == true);
    }
    const SuiteRow* c12 = find_row(report, "n=12 construction");
    REQUIRE(c12 != nullptr);
    CHECK(c12->agree);
    CHECK(c12->formula == "30"); // floor(121/4)
}

TEST_CASE("lemma8-explore suite: certificates below the threshold") {
    SuiteReport report = run_suite("lemma8-explore");
    CHECK(report.pass);
    const SuiteRow* n5 = find_row(report, "n=5 objective");
    REQUIRE(n5 != nullptr);
    CHECK(n5->agree);
    CHECK(n5->construction == "6"); // T_2(5) scores floor(25/4)
    const SuiteRow* bound5 = find_row(report, "n=5 bound");
    REQUIRE(bound5 != nullptr);
    CHECK(bound5->informational);
    CHECK_FALSE(bound5->agree); // the small-n maximum exceeds the bound
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    CHECK(suite_names().size() == 5);
}

TEST_CASE("suite JSON and CSV are byte-deterministic") {
    SuiteReport a = run_suite("zykov");
    SuiteReport b = run_suite("zykov");
    CHECK(to_json(a) == to_json(b));
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_json(a).find("\"suite\":\"zykov\"") != std::string::npos);
    CHECK(to_table(a).find("PASS") != std::string::npos);
}

TEST_CASE("solve JSON is deterministic modulo elapsed_ms") {
    SearchOutcome a = solve({6, 3, parse_pattern("K4")});
    SearchOutcome b = solve({6, 3, parse_pattern("K4")});
    a.elapsed = std::chrono::milliseconds{0};
    b.elapsed = std::chrono::milliseconds{0};
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a).find("\"optimum\":\"8\"") != std::string::npos);
    CHECK(to_json(a).find("\"unique\":true") != std::string::npos);
}
