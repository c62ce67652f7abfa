#pragma once

#include "pact/automaton.hpp"
#include "pact/relation.hpp"

#include <vector>

namespace pact {

// True iff some convex combination of `candidates` has class projection
// exactly `target` (indexed by class id). Decided by exact LP feasibility.
bool can_combine_match_projection(const std::vector<Distribution>& candidates,
                                  const std::vector<Rat>& target,
                                  const std::vector<int>& class_of, int num_classes);

// Spec-facing wrapper: can a combined transition of s hit the given class
// projection? A state with no transitions matches nothing.
bool can_combine_match(const ProbAutomaton& a, StateId s, const std::vector<Rat>& target,
                       const Relation& classes);

// Vertex distributions reachable by branching transitions from s, derived up
// to `depth` recursion steps while moving only inside s's class. depth 0
// yields {dirac(s)}; the result is an under-approximation that grows with
// depth. `max_vertices` caps the vertex set (throws resource_cap_error).
std::vector<Distribution> branching_transition_vertices(const ProbAutomaton& a, StateId s,
                                                        const Relation& classes, int depth,
                                                        std::size_t max_vertices = 4096);

// Weight-function existence (mass transport along rel pairs) between mu and a
// convex combination of `candidates`: lambda >= 0, sum lambda = 1, and a
// nonnegative Delta with row sums mu and column sums sum_i lambda_i nu_i,
// supported on pairs (u,v) with u rel v.
bool weight_function_combined_feasible(const Distribution& mu,
                                       const std::vector<Distribution>& candidates,
                                       const Relation& rel);

} // namespace pact
