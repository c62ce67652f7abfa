#pragma once

#include "pact/automaton.hpp"
#include "pact/formula.hpp"
#include "pact/relation.hpp"

#include <optional>
#include <set>
#include <vector>

namespace pact {

// Bounded brute-force realization of "satisfy the same formulae": the state
// formula alphabet grows as a satisfaction-set lattice, path events are
// enumerated per fragment, and extreme probabilities come from explicit
// scheduler enumeration, independent of the reach engines.
struct FormulaBudget {
    Fragment fragment = Fragment::pctl_minus_i;
    int depth = 2;        // the i of the _i fragments / bounded-until cap
    int nesting = -1;     // lattice enrichment rounds; -1 = to fixpoint
    std::size_t cell_cap = 14;        // lattice unions stay enumerable
    std::size_t work_cap = 1u << 22;  // subset-search nodes for star fragments
};

struct EquivResult {
    bool equivalent = true;
    std::optional<StateRef> formula; // true on the left state, false on the right
    Rat value_left, value_right;
    std::string event_desc;
};

struct PreorderResult {
    bool below = true;
    std::optional<StateRef> refuting; // holds at the right state, fails at the left
};

// Cell id per state under bounded logical equivalence of the fragment.
std::vector<int> oracle_partition(const ProbAutomaton& a, const FormulaBudget& b);

EquivResult logical_equiv(const ProbAutomaton& a, StateId s, StateId r, const FormulaBudget& b);

// Safe-fragment preorder: s below r iff every enumerated safe formula
// satisfied by r is satisfied by s.
PreorderResult logical_preorder(const ProbAutomaton& a, StateId s, StateId r,
                                const FormulaBudget& b);
Relation oracle_safe_preorder(const ProbAutomaton& a, const FormulaBudget& b);

// Path events of the fragment over the round-0 lattice, for inspection.
std::vector<PathRef> enumerate_path_events(const ProbAutomaton& a, const FormulaBudget& b);

// Builds a state formula whose satisfaction set is exactly `target` (a union
// of classes of an oracle-certified equivalence). Throws when the oracle
// budget cannot separate two classes.
StateRef distinguishing_state_formula(const ProbAutomaton& a, const Relation& classes,
                                      const StateSet& target, const FormulaBudget& b);

// Engine-independent extreme probabilities. Bounded: exhaustive enumeration
// of deterministic history-dependent schedulers up to the horizon. Unbounded:
// stationary deterministic policies with a local linear solver.
std::pair<Rat, Rat> brute_bounded_extrema(const ProbAutomaton& a, StateId s, const StateSet& C,
                                          const StateSet& Cp, int n);
std::set<Rat> brute_bounded_values(const ProbAutomaton& a, StateId s, const StateSet& C,
                                   const StateSet& Cp, int n);
std::pair<Rat, Rat> brute_unbounded_extrema(const ProbAutomaton& a, StateId s, const StateSet& C,
                                            const StateSet& Cp);

} // namespace pact
