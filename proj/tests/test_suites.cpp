#include "cdx/suites.hpp"

#include "doctest.h"

using namespace cdx;

TEST_CASE("registry contents") {
    const std::vector<std::string> names = suite_names();
    CHECK(names.size() == 13);
    CHECK(names.front() == "lemma-1.1");
    CHECK(names.back() == "dims");
    for (const std::string& n : names) CHECK(is_suite_name(n));
    CHECK(!is_suite_name("lemma-9.9"));

    CHECK(suite_min_level("norm-chain") == 0);
    CHECK(suite_min_level("lemma-1.1") == 2);
    CHECK(suite_min_level("thm-3.4") == 4);
    CHECK(suite_min_level("thm-3.8") == 5);
    CHECK_THROWS_AS(suite_min_level("nope"), std::invalid_argument);
}

TEST_CASE("every suite passes at its minimum level") {
    for (const std::string& name : suite_names()) {
        RunConfig cfg;
        cfg.level = suite_min_level(name);
        cfg.seed = 5;
        cfg.samples = 8;
        const Report rep = run_suite(name, cfg);
        INFO("suite ", name);
        CHECK(rep.passed());
        CHECK(rep.suite == name);
        CHECK(!rep.checks.empty());
        for (const CheckResult& c : rep.checks) {
            INFO("check ", c.name);
            CHECK(c.samples > 0);
        }
    }
}

TEST_CASE("reports are byte-deterministic") {
    RunConfig cfg;
    cfg.level = 4;
    cfg.seed = 31;
    cfg.samples = 6;
    for (const std::string& name : {"lemma-1.1", "thm-3.4", "thm-4.5", "norm-chain"}) {
        const std::string once = run_suite(name, cfg).to_json().dump(2);
        const std::string twice = run_suite(name, cfg).to_json().dump(2);
        CHECK(once == twice);
    }
}

TEST_CASE("config echo and counterexample-free passes") {
    RunConfig cfg;
    cfg.level = 4;
    cfg.seed = 8;
    cfg.samples = 5;
    const Report rep = run_suite("lemma-1.1", cfg);
    const ordered_json j = rep.to_json();
    CHECK(j["config"]["level"] == 4);
    CHECK(j["config"]["seed"] == 8);
    CHECK(j["config"]["samples"] == 5);
    CHECK(j["config"]["mode"] == "exact");
    CHECK(j["passed"] == true);
    for (const auto& c : j["checks"]) CHECK(c["counterexample"].is_null());
}

TEST_CASE("bad configurations are rejected") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_suite("nope", cfg), std::invalid_argument);

    RunConfig floaty;
    floaty.mode = "float";
    CHECK_THROWS_AS(run_suite("lemma-1.1", floaty), std::invalid_argument);

    RunConfig low;
    low.level = 3;
    CHECK_THROWS_AS(run_suite("thm-3.4", low), std::invalid_argument);

    RunConfig zero;
    zero.samples = 0;
    CHECK_THROWS_AS(run_suite("lemma-1.1", zero), std::invalid_argument);

    RunConfig deep;
    deep.level = kMaxLevel + 1;
    CHECK_THROWS_AS(run_suite("norm-chain", deep), std::invalid_argument);
}

TEST_CASE("norm-chain stores a violation witness from level 4 on") {
    RunConfig cfg;
    cfg.level = 4;
    cfg.seed = 12;
    cfg.samples = 30;
    const Report rep = run_suite("norm-chain", cfg);
    CHECK(rep.passed());
    bool witness_noted = false;
    for (const std::string& n : rep.notes)
        if (n.find("witness") != std::string::npos) witness_noted = true;
    CHECK(witness_noted);
}
