#pragma once

#include "pact/automaton.hpp"

#include <string>
#include <vector>

namespace pact {

// The corpus of concrete automata the regression suite replays. Assumptions
// left implicit in the source material (which labels coincide, which states
// are absorbing) are made explicit in the model text comments.
struct Fixture {
    std::string name;
    std::string model_text;
};

const std::vector<Fixture>& fixture_corpus();
const Fixture& fixture(const std::string& name);
ProbAutomaton fixture_automaton(const std::string& name);

// Composed fixtures used by the non-congruence scenarios.
ProbAutomaton fig1_coin_product();   // fig1 interleaved with the biased coin
ProbAutomaton ex51_coin_product();

} // namespace pact
