#pragma once

#include "pact/generate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pact {

struct SuiteConfig {
    std::uint64_t seed_base = 1;
    int samples = 200;
    GenParams gen;            // per-sample params; seed is overridden
    int compose_states = 2;   // size of the random partner for congruence checks
    bool parallel = true;
};

struct SuiteReport {
    std::string suite;
    int samples = 0;
    int failures = 0;
    std::vector<std::string> lines;             // one line per sub-check
    std::vector<std::string> witness_models;    // serialized counterexample automata
    bool passed() const { return failures == 0; }
    std::string text() const;                   // lines + machine-readable block
};

// Characterization: relation partitions equal the bounded logical-equivalence
// partitions of the matching fragments on every sampled automaton.
SuiteReport characterization_suite(const SuiteConfig& cfg);

// Inclusion chains and congruence properties on the sampled corpus.
SuiteReport inclusion_suite(const SuiteConfig& cfg);

// Reach engines against exhaustive scheduler enumeration, with witness replay.
SuiteReport engine_oracle_suite(const SuiteConfig& cfg);

// The fixture-level non-congruence reproduction.
SuiteReport noncongruence_suite();

std::vector<SuiteReport> run_property_suites(const SuiteConfig& cfg,
                                             const std::vector<std::string>& which = {});

} // namespace pact
