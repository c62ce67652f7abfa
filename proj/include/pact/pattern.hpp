#pragma once

#include "pact/state_set.hpp"

#include <string>
#include <vector>

namespace pact {

// A pattern is a nonempty sequence of state sets constraining the first
// positions of a run; a PatternSet is a finite union of such patterns.
class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<std::vector<StateSet>> pats);

    const std::vector<std::vector<StateSet>>& patterns() const { return pats_; }
    std::size_t size() const { return pats_.size(); }
    int max_len() const;

    // Drops every pattern that extends another pattern of the set (its cone
    // is contained in the shorter one's). Sound for plain cones only; the
    // stuttering closure is evaluated on the unpruned set.
    PatternSet pruned_prefix_free() const;
    bool is_prefix_free() const;

    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    std::vector<std::vector<StateSet>> pats_;
};

} // namespace pact
