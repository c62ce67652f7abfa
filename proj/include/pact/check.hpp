#pragma once

#include "pact/automaton.hpp"
#include "pact/formula.hpp"
#include "pact/reach.hpp"

#include <optional>
#include <vector>

namespace pact {

struct CheckCaps {
    int max_pattern_depth = 4;       // U-free PCTL* compilation depth cap
    std::size_t max_patterns = 100000;
    std::size_t stutter_node_cap = 4096;
};

struct CheckResult {
    std::vector<bool> sat;                 // per state
    // values of the top path formula when the root is a P node
    std::optional<std::vector<Rat>> top_values;
    std::optional<OptMode> top_mode;
};

// Model checker for the supported fragments: PCTL (X, U, U<=n over state
// formulae), U-free PCTL* up to the pattern depth cap, PCTL\X, and PCTL*\X in
// normal form (negation on state subformulae or outermost only). P>=, P>
// compare the scheduler infimum against the bound; P<=, P< the supremum.
CheckResult check(const ProbAutomaton& a, const StateRef& f, const CheckCaps& caps = {});
std::vector<bool> sat_states(const ProbAutomaton& a, const StateRef& f, const CheckCaps& caps = {});

// Per-state optimal value of a path formula, dispatching exactly as check.
std::vector<Rat> path_values(const ProbAutomaton& a, const PathRef& psi, OptMode mode,
                             const CheckCaps& caps = {});

} // namespace pact
