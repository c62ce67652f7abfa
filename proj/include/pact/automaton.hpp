#pragma once

#include "pact/rational.hpp"
#include "pact/state_set.hpp"

#include <map>
#include <string>
#include <vector>

namespace pact {

// Discrete probability distribution over states, exact, entries > 0, sum == 1.
class Distribution {
public:
    Distribution() = default;
    // Validates positivity and sum; zero entries are dropped.
    explicit Distribution(std::vector<std::pair<StateId, Rat>> entries);
    static Distribution dirac(StateId s) { return Distribution({{s, Rat::one()}}); }

    const std::vector<std::pair<StateId, Rat>>& entries() const { return entries_; }
    Rat at(StateId s) const; // 0 if absent
    Rat mass(const StateSet& set) const;
    bool is_dirac() const { return entries_.size() == 1; }
    StateId max_state() const { return entries_.empty() ? -1 : entries_.back().first; }

    // Lumps probabilities by class id; returns a vector indexed by class.
    std::vector<Rat> project(const std::vector<int>& class_of, int num_classes) const;

    bool operator==(const Distribution& o) const { return entries_ == o.entries_; }
    bool operator<(const Distribution& o) const;
    std::size_t hash() const;
    std::string str() const;

private:
    std::vector<std::pair<StateId, Rat>> entries_; // sorted by state id
};

// Finite probabilistic automaton: per-state finite list of distributions,
// initial states, atomic propositions and a labeling. Immutable once built.
struct ProbAutomaton {
    std::string name;
    std::vector<std::string> state_names;        // canonical ids
    std::vector<std::string> display_names;      // e.g. "(s,t)" for products
    std::vector<std::vector<int>> labels;        // sorted prop ids per state
    std::vector<std::string> props;              // prop id -> name
    std::vector<std::vector<Distribution>> transitions;
    StateSet initial;

    int size() const { return static_cast<int>(state_names.size()); }
    const std::vector<Distribution>& trans(StateId s) const { return transitions[s]; }
    bool labels_equal(StateId a, StateId b) const { return labels[a] == labels[b]; }
    // True when every state has at least one outgoing distribution.
    bool total() const;

    // -1 if not found; matches canonical name first, then display name.
    StateId find_state(const std::string& name_or_display) const;
    int find_prop(const std::string& prop) const;
    StateSet states_with_prop(int prop_id) const;
    StateSet all_states() const;

    // Initial partition for every relation: same label set.
    std::vector<int> label_class_of() const;

    std::string display(StateId s) const { return display_names[s]; }

    // Model text round-trip (External Interfaces format).
    static ProbAutomaton parse(const std::string& text);
    std::string to_text() const;
};

// Fails with parse_error on malformed input; see automaton.cpp for the grammar.
ProbAutomaton parse_model(const std::string& text);

} // namespace pact
