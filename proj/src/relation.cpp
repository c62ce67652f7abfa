#include "pact/relation.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <set>

namespace pact {

Relation Relation::label_equality(const std::vector<int>& label_class, Kind kind) {
    int n = static_cast<int>(label_class.size());
    Relation r(n, kind);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (label_class[a] == label_class[b]) r.set(a, b);
    return r;
}

bool Relation::is_reflexive() const {
    for (int i = 0; i < n_; ++i)
        if (!related(i, i)) return false;
    return true;
}

bool Relation::is_symmetric() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (related(a, b) != related(b, a)) return false;
    return true;
}

bool Relation::is_transitive() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!related(a, b)) continue;
            for (int c = 0; c < n_; ++c)
                if (related(b, c) && !related(a, c)) return false;
        }
    return true;
}

std::vector<int> Relation::class_of() const {
    std::vector<int> cid(n_, -1);
    int next = 0;
    for (int a = 0; a < n_; ++a) {
        if (cid[a] >= 0) continue;
        cid[a] = next;
        for (int b = a + 1; b < n_; ++b)
            if (cid[b] < 0 && related(a, b) && related(b, a)) cid[b] = next;
        ++next;
    }
    return cid;
}

int Relation::num_classes() const {
    auto cid = class_of();
    return cid.empty() ? 0 : *std::max_element(cid.begin(), cid.end()) + 1;
}

std::vector<StateSet> Relation::classes() const {
    auto cid = class_of();
    std::vector<StateSet> out(num_classes(), StateSet(n_));
    for (int s = 0; s < n_; ++s) out[cid[s]].set(s);
    return out;
}

StateSet Relation::down_of(int s) const {
    StateSet d(n_);
    for (int a = 0; a < n_; ++a)
        if (related(a, s)) d.set(a);
    return d;
}

bool Relation::subset_of(const Relation& o) const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (related(a, b) && !o.related(a, b)) return false;
    return true;
}

std::string Relation::str() const {
    std::string s;
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) s += related(a, b) ? '1' : '.';
        s += '\n';
    }
    return s;
}

std::vector<StateSet> principal_downsets(const Relation& rel) {
    std::set<StateSet> uniq;
    for (int s = 0; s < rel.size(); ++s) uniq.insert(rel.down_of(s));
    return {uniq.begin(), uniq.end()};
}

std::vector<StateSet> downsets(const Relation& rel, std::size_t cap) {
    std::set<StateSet> closed;
    closed.insert(StateSet(rel.size()));
    auto gens = principal_downsets(rel);
    for (auto& g : gens) {
        std::vector<StateSet> fresh;
        for (auto& c : closed) {
            StateSet u = c | g;
            if (!closed.count(u)) fresh.push_back(u);
        }
        for (auto& f : fresh) closed.insert(f);
        if (closed.size() > cap)
            throw resource_cap_error("downsets", "downward-closed set count exceeds cap " +
                                                     std::to_string(cap));
    }
    return {closed.begin(), closed.end()};
}

} // namespace pact
