#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pact {

using StateId = int;

// Fixed-universe bitset over state ids 0..n-1.
class StateSet {
public:
    StateSet() : n_(0) {}
    explicit StateSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
    static StateSet of(int n, std::initializer_list<int> states) {
        StateSet s(n);
        for (int x : states) s.set(x);
        return s;
    }

    int universe() const { return n_; }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const;
    bool empty() const;
    bool subset_of(const StateSet& o) const;
    bool intersects(const StateSet& o) const;

    StateSet operator|(const StateSet& o) const;
    StateSet operator&(const StateSet& o) const;
    StateSet complement() const; // within the universe
    StateSet minus(const StateSet& o) const;

    bool operator==(const StateSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator<(const StateSet& o) const { return words_ < o.words_; }

    std::vector<int> members() const;
    std::size_t hash() const;
    std::string str() const; // "{0,2,5}"

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

} // namespace pact

template <> struct std::hash<pact::StateSet> {
    std::size_t operator()(const pact::StateSet& s) const { return s.hash(); }
};
