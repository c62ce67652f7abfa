#include "pact/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace pact {

PatternSet::PatternSet(std::vector<std::vector<StateSet>> pats) : pats_(std::move(pats)) {
    for (auto& p : pats_)
        if (p.empty()) throw std::invalid_argument("empty pattern");
    std::sort(pats_.begin(), pats_.end());
    pats_.erase(std::unique(pats_.begin(), pats_.end()), pats_.end());
}

int PatternSet::max_len() const {
    std::size_t m = 0;
    for (auto& p : pats_) m = std::max(m, p.size());
    return static_cast<int>(m);
}

namespace {
bool is_prefix(const std::vector<StateSet>& shorter, const std::vector<StateSet>& longer) {
    if (shorter.size() >= longer.size()) return false;
    for (std::size_t i = 0; i < shorter.size(); ++i)
        if (!(shorter[i] == longer[i])) return false;
    return true;
}
} // namespace

PatternSet PatternSet::pruned_prefix_free() const {
    std::vector<std::vector<StateSet>> keep;
    for (auto& p : pats_) {
        bool extends = false;
        for (auto& q : pats_)
            if (is_prefix(q, p)) { extends = true; break; }
        if (!extends) keep.push_back(p);
    }
    return PatternSet(std::move(keep));
}

bool PatternSet::is_prefix_free() const {
    for (auto& p : pats_)
        for (auto& q : pats_)
            if (is_prefix(q, p)) return false;
    return true;
}

std::string PatternSet::str(const std::vector<std::string>* names) const {
    std::string out;
    for (auto& p : pats_) {
        if (!out.empty()) out += " ";
        out += "<";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ",";
            if (!names) {
                out += p[i].str();
            } else {
                out += "{";
                bool first = true;
                for (int s : p[i].members()) {
                    if (!first) out += ",";
                    out += (*names)[s];
                    first = false;
                }
                out += "}";
            }
        }
        out += ">";
    }
    return out;
}

} // namespace pact
