#pragma once

#include "pact/automaton.hpp"

#include <cstdint>
#include <vector>

namespace pact {

// Reproducible random-model parameters. Distributions are compositions of
// grid splits, so they sum to 1 by construction.
struct GenParams {
    std::uint64_t seed = 1;
    int states = 5;
    int max_transitions = 2;
    std::vector<Rat> prob_grid = {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
    int label_alphabet = 2;
};

// Deterministic in the seed; two runs yield byte-identical model text.
ProbAutomaton generate_random(const GenParams& params);

// Tiny deterministic PRNG (splitmix64) so generated corpora do not depend on
// the standard library's distribution implementations.
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound)
};

} // namespace pact
