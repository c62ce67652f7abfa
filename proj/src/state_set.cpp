#include "pact/state_set.hpp"

#include <bit>

namespace pact {

int StateSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool StateSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool StateSet::subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool StateSet::intersects(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

StateSet StateSet::operator|(const StateSet& o) const {
    StateSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
}

StateSet StateSet::operator&(const StateSet& o) const {
    StateSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

StateSet StateSet::complement() const {
    StateSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    if (n_ & 63) r.words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    return r;
}

StateSet StateSet::minus(const StateSet& o) const {
    StateSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
}

std::vector<int> StateSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

std::size_t StateSet::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) h = (h ^ w) * 1099511628211ull;
    return h;
}

std::string StateSet::str() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i)
        if (test(i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

} // namespace pact
