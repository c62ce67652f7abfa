#pragma once

#include "pact/state_set.hpp"

#include <string>
#include <vector>

namespace pact {

// Boolean matrix over state pairs; used as preorder or equivalence candidate.
class Relation {
public:
    enum class Kind { preorder, equivalence };

    Relation() : n_(0), kind_(Kind::preorder) {}
    Relation(int n, Kind kind, bool full_label_classes = false)
        : n_(n), kind_(kind), bits_(static_cast<std::size_t>(n) * n, 0) {
        for (int i = 0; i < n; ++i) set(i, i);
        (void)full_label_classes;
    }

    // Reflexive relation holding exactly on label-equal pairs.
    static Relation label_equality(const std::vector<int>& label_class, Kind kind);

    int size() const { return n_; }
    Kind kind() const { return kind_; }
    bool related(int a, int b) const { return bits_[static_cast<std::size_t>(a) * n_ + b]; }
    void set(int a, int b) { bits_[static_cast<std::size_t>(a) * n_ + b] = 1; }
    void clear(int a, int b) { bits_[static_cast<std::size_t>(a) * n_ + b] = 0; }

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;

    // Mutual-relatedness classes (for equivalences these are the blocks).
    std::vector<int> class_of() const;
    int num_classes() const;
    std::vector<StateSet> classes() const;

    // Principal down-set of s: every s' with s' R s.
    StateSet down_of(int s) const;

    bool subset_of(const Relation& o) const;
    bool operator==(const Relation& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    std::string str() const;

private:
    int n_;
    Kind kind_;
    std::vector<char> bits_;
};

// All R-downward-closed sets: unions of principal down-sets, closed under
// union (for equivalences this is all unions of classes). Sorted, includes
// the empty set. Throws resource_cap_error beyond `cap` sets.
std::vector<StateSet> downsets(const Relation& rel, std::size_t cap = 1u << 16);

// Only the principal down-sets themselves (Counterexample 4.4 knob).
std::vector<StateSet> principal_downsets(const Relation& rel);

} // namespace pact
