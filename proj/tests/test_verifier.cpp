#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "verifier.hpp"

using namespace pgrank;

namespace {

bool contains(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("full-matrix rank check") {
    const CheckResult r = check_full_rank(2, 3, SquareClass::square);
    CHECK(r.name == "full-rank");
    CHECK(r.expected == "12");
    CHECK(r.computed == "12");
    CHECK(r.numeric);
    CHECK(r.matched);
    CHECK(r.status == CheckStatus::pass);

    CHECK(check_full_rank(1, 7, SquareClass::square).expected == "8");
    for (const SquareClass cls : {SquareClass::square, SquareClass::nonsquare}) {
        const CheckResult s = check_full_rank(3, 3, cls);
        CHECK(s.expected == "40");
        CHECK(s.status == CheckStatus::pass);
    }
}

TEST_CASE("isotropic-count check") {
    CHECK(check_isotropic_count(3, 3, SquareClass::square).expected == "16");
    CHECK(check_isotropic_count(3, 3, SquareClass::nonsquare).expected == "10");
    for (const SquareClass cls : {SquareClass::square, SquareClass::nonsquare}) {
        const CheckResult r = check_isotropic_count(2, 9, cls);
        CHECK(r.expected == "10");
        CHECK(r.status == CheckStatus::pass);
    }
}

TEST_CASE("projective-line check passes for both alpha classes") {
    for (const std::uint32_t q : {3u, 5u, 7u, 9u, 11u}) {
        for (const SquareClass cls : {SquareClass::square, SquareClass::nonsquare}) {
            const CheckResult r = check_pg1(q, cls);
            CHECK(r.status == CheckStatus::pass);
            CHECK(r.matched);
        }
    }
}

TEST_CASE("plane two-block ranks") {
    const CheckResult r3 = check_pg2_two_block(3);
    CHECK(r3.computed == "A11=8 A12=3 A21=3 A22=4");
    CHECK(r3.status == CheckStatus::pass);
    for (const std::uint32_t q : {5u, 7u, 9u, 11u, 13u})
        CHECK(check_pg2_two_block(q).status == CheckStatus::pass);
    CHECK(contains(check_pg2_two_block(9).computed, "A11=80"));
}

TEST_CASE("plane nine-block ranks") {
    CHECK(contains(check_pg2_nine_block(5).computed, "B11=10 B12=9"));
    CHECK(contains(check_pg2_nine_block(7).computed, "B11=20 B12=15"));
    CHECK(contains(check_pg2_nine_block(7).computed, "B22=12"));
    CHECK(contains(check_pg2_nine_block(3).computed, "B11=6 B12=3"));
    CHECK(contains(check_pg2_nine_block(3).computed, "B22=2"));
    for (const std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u})
        CHECK(check_pg2_nine_block(q).status == CheckStatus::pass);
}

TEST_CASE("line-table check") {
    for (const std::uint32_t q : {3u, 5u, 7u, 9u, 11u})
        CHECK(check_line_tables(q).status == CheckStatus::pass);
    const CheckResult r = check_line_tables(3);
    CHECK(contains(r.computed, "passant=(0,2,2)"));
    CHECK(contains(r.computed, "poles=(tangent,secant,passant)"));
}

TEST_CASE("power identities of the anisotropic block") {
    for (const std::uint32_t q : {3u, 5u, 7u, 9u})
        CHECK(check_matrix_identity(q).status == CheckStatus::pass);
}

TEST_CASE("block ranks do not depend on the choice of alpha") {
    for (const std::uint32_t q : {3u, 5u, 7u, 9u})
        CHECK(check_alpha_independence(q).status == CheckStatus::pass);
}

TEST_CASE("diagonal and conic forms give the same block ranks") {
    for (const std::uint32_t q : {3u, 5u, 7u, 9u}) {
        const CheckResult r = check_form_equivalence(q);
        CHECK(r.status == CheckStatus::recorded);
        CHECK(r.matched);
    }
}

TEST_CASE("conjecture checks for odd n and square alpha carry both readings") {
    const auto rs = check_conjecture(3, 3, SquareClass::square);
    REQUIRE(rs.size() == 5);
    CHECK(rs[0].name == "conjecture-a11-rank");
    CHECK(rs[1].name == "conjecture-a22-rank");
    CHECK(rs[2].name == "conjecture-a12-rank-two-term");
    CHECK(rs[3].name == "conjecture-a12-rank-series");
    CHECK(rs[4].name == "conjecture-a21-transpose-rank");
    for (const auto& r : rs) CHECK(r.matched);
    CHECK(rs[2].expected == "10");  // q^2 + 1; the two readings agree at n = 3
    CHECK(rs[3].expected == "10");
    CHECK(rs[0].status == CheckStatus::recorded);
    CHECK(rs[4].status == CheckStatus::pass);
}

TEST_CASE("conjecture checks for even n carry a single reading") {
    const auto rs = check_conjecture(4, 3, SquareClass::square);
    REQUIRE(rs.size() == 4);
    CHECK(rs[2].name == "conjecture-a12-rank");
    CHECK(rs[2].expected == "30");  // q^3 + q
    CHECK(rs[2].matched);
}

TEST_CASE("the two readings disagree at n = 5 and only the two-term one holds") {
    const auto rs = check_conjecture(5, 3, SquareClass::square);
    REQUIRE(rs.size() == 5);
    CHECK(rs[2].name == "conjecture-a12-rank-two-term");
    CHECK(rs[2].expected == "90");  // q^4 + q^2
    CHECK(rs[2].computed == "90");
    CHECK(rs[2].matched);
    CHECK(rs[3].name == "conjecture-a12-rank-series");
    CHECK(rs[3].expected == "91");  // q^4 + q^2 + 1
    CHECK(rs[3].computed == "90");
    CHECK_FALSE(rs[3].matched);
    CHECK(rs[3].status == CheckStatus::recorded);
}

TEST_CASE("the readings flip at n = 7: only the series one holds") {
    const auto rs = check_conjecture(7, 3, SquareClass::square);
    REQUIRE(rs.size() == 5);
    CHECK(rs[2].expected == "810");  // q^6 + q^4
    CHECK(rs[2].computed == "820");
    CHECK_FALSE(rs[2].matched);
    CHECK(rs[3].expected == "820");  // q^6 + q^4 + q^2 + 1
    CHECK(rs[3].matched);
}

TEST_CASE("conjecture evaluation rejects proven dimensions") {
    CHECK_THROWS_AS(check_conjecture(2, 3, SquareClass::square), std::invalid_argument);
}

TEST_CASE("suite configuration validation") {
    SuiteConfig bad;
    bad.suite = "bogus";
    CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
    SuiteConfig zero;
    zero.nmax = 0;
    CHECK_THROWS_AS(run_suite(zero), std::invalid_argument);
}

TEST_CASE("empty q list gives an empty report") {
    SuiteConfig cfg;
    cfg.qs.clear();
    const VerificationReport r = run_suite(cfg);
    CHECK(r.checks.empty());
    CHECK(r.pass == 0);
    CHECK(r.fail == 0);
    CHECK(r.recorded == 0);
    CHECK(report_to_json(r, false) ==
          "{\"checks\":[],\"summary\":{\"pass\":0,\"fail\":0,\"recorded\":0}}");
}

TEST_CASE("the proven suite never records conjecture checks and passes") {
    SuiteConfig cfg;
    cfg.suite = "proven";
    cfg.qs = {3, 5};
    const VerificationReport r = run_suite(cfg);
    CHECK(r.fail == 0);
    CHECK(r.pass > 0);
    for (const auto& c : r.checks) CHECK_FALSE(contains(c.name, "conjecture"));
}

TEST_CASE("the conjecture suite at the default depth matches everywhere") {
    SuiteConfig cfg;
    cfg.suite = "conjecture";
    cfg.qs = {3, 5};
    cfg.strict = true;
    const VerificationReport r = run_suite(cfg);
    CHECK(r.fail == 0);
    for (const auto& c : r.checks) CHECK(contains(c.name, "conjecture"));
}

TEST_CASE("strict mode promotes the failed series reading at n = 5") {
    SuiteConfig cfg;
    cfg.suite = "conjecture";
    cfg.qs = {3};
    cfg.nmax = 5;

    const VerificationReport loose = run_suite(cfg);
    CHECK(loose.fail == 0);
    bool mismatch_recorded = false;
    for (const auto& c : loose.checks)
        if (c.name == "conjecture-a12-rank-series" && !c.matched) mismatch_recorded = true;
    CHECK(mismatch_recorded);

    cfg.strict = true;
    const VerificationReport strict = run_suite(cfg);
    CHECK(strict.fail > 0);
}

TEST_CASE("reports are deterministic") {
    SuiteConfig cfg;
    cfg.qs = {3, 5};
    cfg.nmax = 2;
    const VerificationReport a = run_suite(cfg);
    const VerificationReport b = run_suite(cfg);
    CHECK(report_to_json(a, false) == report_to_json(b, false));
    CHECK(report_to_text(a) == report_to_text(b));
}

TEST_CASE("json shape for a single check") {
    VerificationReport r;
    r.checks.push_back(check_full_rank(2, 3, SquareClass::square));
    r.tally();
    const std::string js = report_to_json(r, false);
    CHECK(contains(js, "\"name\":\"full-rank\""));
    CHECK(contains(js, "\"params\":{\"n\":2,\"q\":3,\"alpha\":\"square\",\"form\":\"diagonal\"}"));
    CHECK(contains(js, "\"expected\":12,\"computed\":12,\"status\":\"pass\""));
    CHECK(contains(js, "\"paper_ref\":\"full-matrix-rank-formula\""));
    CHECK(contains(js, "\"summary\":{\"pass\":1,\"fail\":0,\"recorded\":0}"));
    CHECK(js.back() == '}');

    const std::string with_meta = report_to_json(r, true);
    CHECK(contains(with_meta, "\"meta\""));
    CHECK(contains(with_meta, "\"tool\""));
    CHECK(with_meta.size() > js.size());

    const std::string text = report_to_text(r);
    CHECK(contains(text, "full-rank"));
    CHECK(contains(text, "pass"));
    CHECK(contains(text, "summary:"));
}

TEST_CASE("tally counts statuses") {
    VerificationReport r;
    r.checks.push_back(check_full_rank(1, 3, SquareClass::square));
    r.checks.push_back(check_form_equivalence(3));
    r.tally();
    CHECK(r.pass == 1);
    CHECK(r.recorded == 1);
    CHECK(r.fail == 0);
}
