#include "pact/automaton.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace pact {

Distribution::Distribution(std::vector<std::pair<StateId, Rat>> entries) {
    std::map<StateId, Rat> acc;
    for (auto& [s, p] : entries) {
        if (p.sign() < 0) throw std::invalid_argument("negative probability " + p.str());
        if (p.is_zero()) continue;
        acc[s] += p;
    }
    Rat sum;
    for (auto& [s, p] : acc) {
        entries_.emplace_back(s, p);
        sum += p;
    }
    if (!sum.is_one())
        throw std::invalid_argument("distribution sums to " + sum.str());
}

Rat Distribution::at(StateId s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const auto& e, StateId v) { return e.first < v; });
    if (it != entries_.end() && it->first == s) return it->second;
    return Rat::zero();
}

Rat Distribution::mass(const StateSet& set) const {
    Rat m;
    for (auto& [s, p] : entries_)
        if (set.test(s)) m += p;
    return m;
}

std::vector<Rat> Distribution::project(const std::vector<int>& class_of, int num_classes) const {
    std::vector<Rat> out(num_classes);
    for (auto& [s, p] : entries_) out[class_of[s]] += p;
    return out;
}

bool Distribution::operator<(const Distribution& o) const {
    return std::lexicographical_compare(
        entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

std::size_t Distribution::hash() const {
    std::size_t h = 14695981039346656037ull;
    for (auto& [s, p] : entries_) {
        h = (h ^ static_cast<std::size_t>(s)) * 1099511628211ull;
        h = (h ^ p.hash()) * 1099511628211ull;
    }
    return h;
}

std::string Distribution::str() const {
    std::string s;
    for (auto& [st, p] : entries_) {
        if (!s.empty()) s += " ";
        s += p.str() + ":" + std::to_string(st);
    }
    return "(" + s + ")";
}

bool ProbAutomaton::total() const {
    for (auto& tl : transitions)
        if (tl.empty()) return false;
    return true;
}

StateId ProbAutomaton::find_state(const std::string& name_or_display) const {
    for (int i = 0; i < size(); ++i)
        if (state_names[i] == name_or_display) return i;
    for (int i = 0; i < size(); ++i)
        if (display_names[i] == name_or_display) return i;
    return -1;
}

int ProbAutomaton::find_prop(const std::string& prop) const {
    for (int i = 0; i < static_cast<int>(props.size()); ++i)
        if (props[i] == prop) return i;
    return -1;
}

StateSet ProbAutomaton::states_with_prop(int prop_id) const {
    StateSet out(size());
    for (int s = 0; s < size(); ++s)
        if (std::binary_search(labels[s].begin(), labels[s].end(), prop_id)) out.set(s);
    return out;
}

StateSet ProbAutomaton::all_states() const {
    StateSet out(size());
    for (int s = 0; s < size(); ++s) out.set(s);
    return out;
}

std::vector<int> ProbAutomaton::label_class_of() const {
    std::map<std::vector<int>, int> seen;
    std::vector<int> cid(size());
    for (int s = 0; s < size(); ++s) {
        auto [it, fresh] = seen.emplace(labels[s], static_cast<int>(seen.size()));
        cid[s] = it->second;
    }
    return cid;
}

namespace {

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

ProbAutomaton ProbAutomaton::parse(const std::string& text) {
    ProbAutomaton pa;
    std::map<std::string, int> state_ix;
    std::map<std::string, int> prop_ix;
    std::vector<bool> absorbing;
    std::map<int, std::string> displays;
    struct PendingTrans {
        int line;
        std::string src;
        std::vector<std::pair<std::string, std::string>> parts; // prob, target
    };
    std::vector<PendingTrans> pending;
    std::vector<std::pair<int, std::string>> pending_init;

    auto intern_prop = [&](const std::string& p) {
        auto [it, fresh] = prop_ix.emplace(p, static_cast<int>(pa.props.size()));
        if (fresh) pa.props.push_back(p);
        return it->second;
    };

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        // magic comment written by the composer to preserve display names
        if (raw.rfind("# display ", 0) == 0) {
            auto rest = raw.substr(10);
            auto sp = rest.find(' ');
            if (sp != std::string::npos) {
                std::string id = rest.substr(0, sp), disp = rest.substr(sp + 1);
                auto it = state_ix.find(id);
                if (it != state_ix.end()) displays[it->second] = disp;
            }
            continue;
        }
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "pa") {
            if (toks.size() != 2) throw parse_error(lineno, "expected: pa <name>");
            pa.name = toks[1];
        } else if (kw == "state" || kw == "absorbing") {
            if (toks.size() < 2) throw parse_error(lineno, "expected: " + kw + " <id> [label p,q,...]");
            const std::string& id = toks[1];
            if (!valid_id(id)) throw parse_error(lineno, "bad state id '" + id + "'");
            if (state_ix.count(id)) throw parse_error(lineno, "state '" + id + "' declared twice");
            state_ix[id] = static_cast<int>(pa.state_names.size());
            pa.state_names.push_back(id);
            pa.labels.emplace_back();
            absorbing.push_back(kw == "absorbing");
            if (toks.size() > 2) {
                if (toks[2] != "label" || toks.size() != 4)
                    throw parse_error(lineno, "expected: " + kw + " <id> label p,q,...");
                std::vector<int> lbl;
                for (auto& p : split_commas(toks[3])) lbl.push_back(intern_prop(p));
                std::sort(lbl.begin(), lbl.end());
                lbl.erase(std::unique(lbl.begin(), lbl.end()), lbl.end());
                pa.labels.back() = lbl;
            }
        } else if (kw == "init") {
            if (toks.size() != 2) throw parse_error(lineno, "expected: init <id>");
            pending_init.emplace_back(lineno, toks[1]);
        } else if (kw == "trans") {
            if (toks.size() < 4 || toks[2] != "->")
                throw parse_error(lineno, "expected: trans <id> -> <prob>:<id> ...");
            PendingTrans t;
            t.line = lineno;
            t.src = toks[1];
            for (std::size_t i = 3; i < toks.size(); ++i) {
                auto colon = toks[i].find(':');
                if (colon == std::string::npos)
                    throw parse_error(lineno, "expected <prob>:<id>, got '" + toks[i] + "'");
                t.parts.emplace_back(toks[i].substr(0, colon), toks[i].substr(colon + 1));
            }
            pending.push_back(std::move(t));
        } else {
            throw parse_error(lineno, "unknown directive '" + kw + "'");
        }
    }

    pa.display_names = pa.state_names;
    for (auto& [ix, d] : displays) pa.display_names[ix] = d;
    pa.transitions.assign(pa.state_names.size(), {});
    pa.initial = StateSet(pa.size());

    auto lookup = [&](int line, const std::string& id) {
        auto it = state_ix.find(id);
        if (it == state_ix.end()) throw parse_error(line, "undeclared state '" + id + "'");
        return it->second;
    };
    for (auto& [line, id] : pending_init) pa.initial.set(lookup(line, id));
    for (auto& t : pending) {
        int src = lookup(t.line, t.src);
        std::vector<std::pair<StateId, Rat>> entries;
        for (auto& [ps, ts] : t.parts) {
            Rat p;
            try {
                p = Rat::parse(ps);
            } catch (const std::invalid_argument& e) {
                throw parse_error(t.line, e.what());
            }
            entries.emplace_back(lookup(t.line, ts), p);
        }
        try {
            pa.transitions[src].push_back(Distribution(std::move(entries)));
        } catch (const std::invalid_argument& e) {
            throw parse_error(t.line, e.what());
        }
    }
    for (int s = 0; s < pa.size(); ++s)
        if (absorbing[s]) pa.transitions[s].push_back(Distribution::dirac(s));
    return pa;
}

std::string ProbAutomaton::to_text() const {
    std::ostringstream os;
    os << "pa " << (name.empty() ? "model" : name) << "\n";
    for (int s = 0; s < size(); ++s) {
        os << "state " << state_names[s];
        if (!labels[s].empty()) {
            os << " label ";
            for (std::size_t i = 0; i < labels[s].size(); ++i)
                os << (i ? "," : "") << props[labels[s][i]];
        }
        os << "\n";
        if (display_names[s] != state_names[s])
            os << "# display " << state_names[s] << " " << display_names[s] << "\n";
    }
    for (int s : initial.members()) os << "init " << state_names[s] << "\n";
    for (int s = 0; s < size(); ++s)
        for (auto& mu : transitions[s]) {
            os << "trans " << state_names[s] << " ->";
            for (auto& [t, p] : mu.entries()) os << " " << p.str() << ":" << state_names[t];
            os << "\n";
        }
    return os.str();
}

ProbAutomaton parse_model(const std::string& text) { return ProbAutomaton::parse(text); }

} // namespace pact
