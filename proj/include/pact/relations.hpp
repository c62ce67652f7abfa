#pragma once

#include "pact/automaton.hpp"
#include "pact/pattern.hpp"
#include "pact/rational.hpp"
#include "pact/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pact {

// Which inequality the quantitative clauses use. The definitions print "<="
// while the proofs use ">="; neither alone matches the logical equivalences
// (see the decisions ledger), so bisimulation checkers default to `both`,
// which pins the achievable value range at both ends. Simulations use the
// printed at-most clause.
enum class Direction { at_least, at_most, both };

enum class DownsetMode { full, principal_only };

struct RelCaps {
    std::size_t downset_cap = 1u << 16;
    int branching_derivation_depth = -1; // -1: number of states
    std::size_t branching_vertex_cap = 4096;
    int weak_pattern_len = -1;           // -1: number of classes + 1
    int weak_antichain_size = 2;
    std::size_t weak_eval_budget = 20000;
    std::size_t sim_pattern_budget = 4000;
    std::size_t value_set_cap = 65536;
    std::size_t stutter_node_cap = 4096;
};

struct Witness {
    enum class Kind { one_step, reach_event, pattern_event, stutter_event, no_combined_match };
    Kind kind = Kind::one_step;
    StateSet C, Cp;       // one_step uses C only
    int steps = -1;       // reach_event horizon, -1 when unbounded
    PatternSet patterns;  // pattern_event / stutter_event
    Rat left_value, right_value;
    std::string text(const ProbAutomaton& a) const;
};

struct Verdict {
    std::string relation_name;
    int depth = -1;
    Direction direction = Direction::both;
    Relation relation;
    std::optional<std::pair<StateId, StateId>> pair;
    bool related = false;
    bool caps_hit = false;
    std::vector<std::string> notes;
    std::optional<Witness> witness;
    std::string text(const ProbAutomaton& a) const;
};

struct RelationQuery {
    std::string name; // strong-prob-bisim, branching-prob-bisim, strong-1, strong-branching-i,
                      // strong-i, weak-branching-bisim, weak-bisim, strong-prob-sim,
                      // branching-sim-i, sim-i, weak-branching-sim, weak-sim
    int depth = -1;
    Direction direction = Direction::both;
    DownsetMode downset_mode = DownsetMode::full;
    RelCaps caps;
};

// ---- bisimulations ----
Relation strong_prob_bisim(const ProbAutomaton& a);
Relation branching_prob_bisim(const ProbAutomaton& a, int depth = -1, const RelCaps& caps = {});
Relation strong_1_depth(const ProbAutomaton& a, Direction dir = Direction::both,
                        DownsetMode dm = DownsetMode::full, const RelCaps& caps = {});
Relation strong_branching_i(const ProbAutomaton& a, int i, Direction dir = Direction::both,
                            const RelCaps& caps = {});
Relation strong_i_depth(const ProbAutomaton& a, int i, const RelCaps& caps = {});
Relation weak_branching_bisim(const ProbAutomaton& a, Direction dir = Direction::both,
                              const RelCaps& caps = {});
Relation weak_bisim(const ProbAutomaton& a, const RelCaps& caps = {},
                    std::vector<std::string>* notes = nullptr);

// ---- simulations (preorders; clause 1 only, at-most as printed) ----
Relation strong_prob_sim(const ProbAutomaton& a);
Relation branching_sim_i(const ProbAutomaton& a, int i, const RelCaps& caps = {});
Relation sim_i_depth(const ProbAutomaton& a, int i, const RelCaps& caps = {},
                     std::vector<std::string>* notes = nullptr);
Relation weak_branching_sim(const ProbAutomaton& a, const RelCaps& caps = {});
Relation weak_sim(const ProbAutomaton& a, const RelCaps& caps = {},
                  std::vector<std::string>* notes = nullptr);

// Runs the named relation, and when a pair is given searches for a replayable
// separating witness.
Verdict run_relation_query(const ProbAutomaton& a, const RelationQuery& q,
                           std::optional<std::pair<StateId, StateId>> pair = std::nullopt);

std::vector<std::string> relation_names();

} // namespace pact
