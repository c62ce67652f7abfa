#pragma once

#include "pact/automaton.hpp"
#include "pact/pattern.hpp"
#include "pact/state_set.hpp"

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace pact {

enum class OptMode { sup, inf };

// Deterministic policy that replays to the reported optimum. Keys are
// (state, node, step): node is a product/trie node id (0 when the query has
// no product structure), step is -1 for stationary policies.
struct PolicyWitness {
    enum class Kind { finite_horizon, stationary };
    Kind kind = Kind::finite_horizon;
    std::map<std::tuple<int, int, int>, int> choice;
};

struct ReachResult {
    Rat value;
    PolicyWitness witness;
};

// ---- bounded constrained reachability ----
// Optimal probability of reaching Cp within at most n steps moving through C.
// V_0(u) = [u in Cp]; V_k(u) = 1 if u in Cp, 0 if u not in C, else opt over
// transitions of the one-step expectation of V_{k-1}.
ReachResult bounded_reach(const ProbAutomaton& a, StateId s, const StateSet& C, const StateSet& Cp,
                          int n, OptMode mode);
// Full value table, values[k][u] = optimum with k steps allowed.
std::vector<std::vector<Rat>> bounded_reach_values(const ProbAutomaton& a, const StateSet& C,
                                                   const StateSet& Cp, int n, OptMode mode);
Rat replay_bounded(const ProbAutomaton& a, StateId s, const StateSet& C, const StateSet& Cp, int n,
                   const PolicyWitness& w);

// ---- unbounded constrained reachability ----
// Exact optimum via stationary policy iteration with rational linear solves;
// inf runs a qualitative zero-set precomputation first.
ReachResult unbounded_reach(const ProbAutomaton& a, StateId s, const StateSet& C,
                            const StateSet& Cp, OptMode mode);
std::vector<Rat> unbounded_reach_values(const ProbAutomaton& a, const StateSet& C,
                                        const StateSet& Cp, OptMode mode);
Rat replay_unbounded(const ProbAutomaton& a, StateId s, const StateSet& C, const StateSet& Cp,
                     const PolicyWitness& w);

// ---- plain pattern cones ----
// Optimal probability that some prefix of the run matches some pattern
// (position j of the run inside set j). Duplicate-path counting is avoided by
// absorbing on the first full match; the set is prefix-pruned first.
ReachResult pattern_opt(const ProbAutomaton& a, StateId s, const PatternSet& pats, OptMode mode);
std::vector<Rat> pattern_opt_values(const ProbAutomaton& a, const PatternSet& pats, OptMode mode);
Rat replay_pattern(const ProbAutomaton& a, StateId s, const PatternSet& pats,
                   const PolicyWitness& w);

// ---- stuttering pattern cones ----
// Each non-final set may be repeated or skipped (k >= 0 copies), the final
// set is consumed once. Realized as a determinized acceptor product plus
// unbounded reachability to the absorbing accept class.
ReachResult stuttering_pattern_opt(const ProbAutomaton& a, StateId s, const PatternSet& pats,
                                   OptMode mode, std::size_t node_cap = 4096);
std::vector<Rat> stuttering_pattern_opt_values(const ProbAutomaton& a, const PatternSet& pats,
                                               OptMode mode, std::size_t node_cap = 4096);
Rat replay_stuttering(const ProbAutomaton& a, StateId s, const PatternSet& pats,
                      const PolicyWitness& w, std::size_t node_cap = 4096);

// ---- achievable-value sets (for the guarded match-at-most clauses) ----
// All values of the bounded query realizable by deterministic schedulers.
std::set<Rat> bounded_value_set(const ProbAutomaton& a, StateId s, const StateSet& C,
                                const StateSet& Cp, int n, std::size_t cap = 65536);
std::vector<std::set<Rat>> bounded_value_sets(const ProbAutomaton& a, const StateSet& C,
                                              const StateSet& Cp, int n,
                                              std::size_t cap = 65536);
// Values realizable by stationary deterministic schedulers (unbounded query).
std::set<Rat> unbounded_stationary_value_set(const ProbAutomaton& a, StateId s, const StateSet& C,
                                             const StateSet& Cp, std::size_t cap = 65536);
std::vector<std::set<Rat>> unbounded_stationary_value_sets(const ProbAutomaton& a,
                                                           const StateSet& C, const StateSet& Cp,
                                                           std::size_t cap = 65536);
std::optional<Rat> min_positive(const std::set<Rat>& values);

} // namespace pact
