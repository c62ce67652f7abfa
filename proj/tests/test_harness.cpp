#include "doctest.h"

#include "pact/generate.hpp"
#include "pact/parallel.hpp"
#include "pact/suites.hpp"

using namespace pact;

TEST_CASE("generator is deterministic in the seed") {
    GenParams g;
    g.seed = 42;
    auto a = generate_random(g);
    auto b = generate_random(g);
    CHECK(a.to_text() == b.to_text());
    g.seed = 43;
    CHECK(generate_random(g).to_text() != a.to_text());
}

TEST_CASE("generator honors the structural parameters") {
    GenParams g;
    g.states = 1;
    g.seed = 7;
    auto solo = generate_random(g);
    CHECK(solo.size() == 1);
    REQUIRE_FALSE(solo.trans(0).empty());
    CHECK(solo.trans(0)[0].at(0).is_one()); // all mass loops back

    g.states = 5;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        g.seed = seed;
        auto a = generate_random(g);
        CHECK(a.total());
        for (int s = 0; s < a.size(); ++s) {
            CHECK(a.trans(s).size() <= 2);
            for (auto& mu : a.trans(s))
                for (auto& [v, p] : mu.entries()) {
                    // grid {1/4,1/2,3/4,1} closes under the splits: every
                    // entry is a multiple of 1/4
                    Rat scaled = p * Rat(4);
                    CHECK(scaled.raw().get_den() == 1);
                }
        }
    }
}

TEST_CASE("suites pass on a small corpus and reports are deterministic") {
    SuiteConfig cfg;
    cfg.samples = 12;
    cfg.parallel = false;
    auto reports = run_property_suites(cfg);
    REQUIRE(reports.size() == 4);
    for (auto& r : reports) {
        INFO(r.suite, ": ", r.text());
        CHECK(r.passed());
    }
    auto again = run_property_suites(cfg);
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(reports[i].text() == again[i].text());
}

TEST_CASE("parallel and serial suite runs agree") {
    SuiteConfig serial, par;
    serial.samples = par.samples = 10;
    serial.parallel = false;
    par.parallel = true;
    auto a = run_property_suites(serial);
    auto b = run_property_suites(par);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].text() == b[i].text());
}

TEST_CASE("report text carries the machine block") {
    SuiteConfig cfg;
    cfg.samples = 2;
    cfg.parallel = false;
    auto rep = engine_oracle_suite(cfg);
    auto text = rep.text();
    CHECK(text.find("suite: engine-oracle") != std::string::npos);
    CHECK(text.find("samples: 2") != std::string::npos);
    CHECK(text.find("failures: 0") != std::string::npos);
    CHECK(text.find("witness-file:") != std::string::npos);
}
