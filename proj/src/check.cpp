#include "pact/check.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pact {

namespace {

struct Checker {
    const ProbAutomaton& a;
    const CheckCaps& caps;

    StateSet sat_of(const StateRef& f) {
        using K = StateFormula::Kind;
        switch (f->kind) {
        case K::tt: return a.all_states();
        case K::ff: return StateSet(a.size());
        case K::atom: {
            int p = a.find_prop(f->atom);
            return p < 0 ? StateSet(a.size()) : a.states_with_prop(p);
        }
        case K::not_: return sat_of(f->lhs).complement();
        case K::and_: return sat_of(f->lhs) & sat_of(f->rhs);
        case K::or_: return sat_of(f->lhs) | sat_of(f->rhs);
        case K::prob: {
            Cmp cmp = f->cmp;
            OptMode mode = (cmp == Cmp::ge || cmp == Cmp::gt) ? OptMode::inf : OptMode::sup;
            auto vals = values_of(f->path, mode);
            StateSet out(a.size());
            for (int s = 0; s < a.size(); ++s)
                if (cmp_holds(vals[s], cmp, f->bound)) out.set(s);
            return out;
        }
        }
        return StateSet(a.size());
    }

    bool is_state(const PathRef& p) const { return p->kind == PathFormula::Kind::state; }

    std::vector<Rat> values_of(const PathRef& psi, OptMode mode) {
        using K = PathFormula::Kind;
        // strip outermost path negations by complementing the measure
        if (psi->kind == K::not_) {
            auto inner = values_of(psi->lhs, mode == OptMode::sup ? OptMode::inf : OptMode::sup);
            std::vector<Rat> out(a.size());
            for (int s = 0; s < a.size(); ++s) out[s] = Rat(1) - inner[s];
            return out;
        }
        // PCTL shapes go straight to the engines
        if (psi->kind == K::next && is_state(psi->lhs)) {
            StateSet C = sat_of(psi->lhs->state);
            std::vector<Rat> out(a.size());
            for (int s = 0; s < a.size(); ++s) {
                bool first = true;
                Rat best;
                for (auto& mu : a.trans(s)) {
                    Rat q = mu.mass(C);
                    if (first || (mode == OptMode::sup ? q > best : q < best)) {
                        best = q;
                        first = false;
                    }
                }
                out[s] = first ? Rat(0) : best;
            }
            return out;
        }
        if (psi->kind == K::buntil && is_state(psi->lhs) && is_state(psi->rhs)) {
            StateSet C = sat_of(psi->lhs->state), Cp = sat_of(psi->rhs->state);
            return bounded_reach_values(a, C, Cp, psi->bound, mode)[psi->bound];
        }
        if (psi->kind == K::until && is_state(psi->lhs) && is_state(psi->rhs)) {
            StateSet C = sat_of(psi->lhs->state), Cp = sat_of(psi->rhs->state);
            return unbounded_reach_values(a, C, Cp, mode);
        }
        if (psi->kind == K::state) {
            // the whole cone qualifies or not
            StateSet C = sat_of(psi->state);
            std::vector<Rat> out(a.size());
            for (int s = 0; s < a.size(); ++s) out[s] = C.test(s) ? Rat(1) : Rat(0);
            return out;
        }
        // U-free boolean structure: compile to plain patterns
        if (u_free(psi)) return pattern_values(psi, mode);
        // no X anywhere: compile to stuttering patterns
        if (x_free(psi)) {
            PatternSet ps = compile_stutter(psi);
            return stuttering_pattern_opt_values(a, ps, mode, caps.stutter_node_cap);
        }
        throw fragment_error(str(psi),
                             "unsupported fragment (mixed X and U): " + str(psi));
    }

    static bool u_free(const PathRef& p) {
        using K = PathFormula::Kind;
        switch (p->kind) {
        case K::state: return true;
        case K::not_: return u_free(p->lhs);
        case K::and_:
        case K::or_: return u_free(p->lhs) && u_free(p->rhs);
        case K::next: return u_free(p->lhs);
        default: return false;
        }
    }
    static bool x_free(const PathRef& p) {
        using K = PathFormula::Kind;
        switch (p->kind) {
        case K::state: return true;
        case K::not_: return x_free(p->lhs);
        case K::and_:
        case K::or_:
        case K::until: return x_free(p->lhs) && x_free(p->rhs);
        case K::buntil: return false;
        case K::next: return false;
        }
        return false;
    }

    // ---- U-free compilation: satisfaction-set sequences over cells ----

    void gather_positioned(const PathRef& p, int pos, std::vector<std::pair<int, StateRef>>& out) {
        using K = PathFormula::Kind;
        switch (p->kind) {
        case K::state: out.emplace_back(pos, p->state); return;
        case K::not_: gather_positioned(p->lhs, pos, out); return;
        case K::and_:
        case K::or_:
            gather_positioned(p->lhs, pos, out);
            gather_positioned(p->rhs, pos, out);
            return;
        case K::next: gather_positioned(p->lhs, pos + 1, out); return;
        default: throw fragment_error(str(p), "until in U-free compilation");
        }
    }

    bool eval_skeleton(const PathRef& p, int pos, const std::vector<int>& cell_seq,
                       const std::vector<std::vector<char>>& cell_in_sat,
                       const std::map<const StateFormula*, int>& sat_ix) {
        using K = PathFormula::Kind;
        switch (p->kind) {
        case K::state:
            return cell_in_sat[cell_seq[pos]][sat_ix.at(p->state.get())];
        case K::not_: return !eval_skeleton(p->lhs, pos, cell_seq, cell_in_sat, sat_ix);
        case K::and_:
            return eval_skeleton(p->lhs, pos, cell_seq, cell_in_sat, sat_ix) &&
                   eval_skeleton(p->rhs, pos, cell_seq, cell_in_sat, sat_ix);
        case K::or_:
            return eval_skeleton(p->lhs, pos, cell_seq, cell_in_sat, sat_ix) ||
                   eval_skeleton(p->rhs, pos, cell_seq, cell_in_sat, sat_ix);
        case K::next: return eval_skeleton(p->lhs, pos + 1, cell_seq, cell_in_sat, sat_ix);
        default: return false;
        }
    }

    std::vector<Rat> pattern_values(const PathRef& psi, OptMode mode) {
        int d = depth(psi);
        if (d > caps.max_pattern_depth)
            throw resource_cap_error("pattern-depth",
                                     "formula depth " + std::to_string(d) + " exceeds cap " +
                                         std::to_string(caps.max_pattern_depth));
        std::vector<std::pair<int, StateRef>> positioned;
        gather_positioned(psi, 0, positioned);
        // distinct sat sets and the induced cell partition
        std::vector<StateSet> sats;
        std::map<const StateFormula*, int> sat_ix;
        for (auto& [pos, sf] : positioned)
            if (!sat_ix.count(sf.get())) {
                sat_ix[sf.get()] = static_cast<int>(sats.size());
                sats.push_back(sat_of(sf));
            }
        std::map<std::vector<char>, int> profile_to_cell;
        std::vector<int> cell_of(a.size());
        std::vector<std::vector<char>> cell_profile;
        std::vector<StateSet> cell_set;
        for (int s = 0; s < a.size(); ++s) {
            std::vector<char> prof;
            for (auto& S : sats) prof.push_back(S.test(s) ? 1 : 0);
            auto [it, fresh] = profile_to_cell.emplace(prof, static_cast<int>(profile_to_cell.size()));
            if (fresh) {
                cell_profile.push_back(prof);
                cell_set.push_back(StateSet(a.size()));
            }
            cell_of[s] = it->second;
            cell_set[it->second].set(s);
        }
        const int nc = static_cast<int>(cell_set.size());
        // every accepted cell sequence of length d+1 becomes a pattern
        std::vector<std::vector<StateSet>> pats;
        std::vector<int> seq(d + 1, 0);
        for (;;) {
            if (eval_skeleton(psi, 0, seq, cell_profile, sat_ix)) {
                std::vector<StateSet> pat;
                for (int k = 0; k <= d; ++k) pat.push_back(cell_set[seq[k]]);
                pats.push_back(std::move(pat));
                if (pats.size() > caps.max_patterns)
                    throw resource_cap_error("pattern-count", "compiled pattern count exceeds cap " +
                                                                  std::to_string(caps.max_patterns));
            }
            int k = 0;
            while (k <= d && ++seq[k] == nc) seq[k++] = 0;
            if (k > d) break;
        }
        if (pats.empty()) return std::vector<Rat>(a.size());
        return pattern_opt_values(a, PatternSet(std::move(pats)), mode);
    }

    // ---- PCTL*\X compilation per the union/concatenation cases ----

    PatternSet compile_stutter(const PathRef& psi) {
        std::vector<std::vector<StateSet>> pats = stutter_rec(psi);
        return PatternSet(std::move(pats));
    }

    std::vector<std::vector<StateSet>> stutter_rec(const PathRef& p) {
        using K = PathFormula::Kind;
        switch (p->kind) {
        case K::state: return {{sat_of(p->state)}};
        case K::or_: {
            auto l = stutter_rec(p->lhs), r = stutter_rec(p->rhs);
            for (auto& x : r) l.push_back(std::move(x));
            return l;
        }
        case K::until: {
            auto l = stutter_rec(p->lhs), r = stutter_rec(p->rhs);
            std::vector<std::vector<StateSet>> out;
            for (auto& x : l)
                for (auto& y : r) {
                    std::vector<StateSet> cat = x;
                    cat.insert(cat.end(), y.begin(), y.end());
                    out.push_back(std::move(cat));
                }
            return out;
        }
        case K::and_:
            if (is_state(p->lhs) && is_state(p->rhs))
                return {{sat_of(p->lhs->state) & sat_of(p->rhs->state)}};
            throw fragment_error(str(p), "conjunction of until formulae is outside the "
                                         "supported normal form: " + str(p));
        case K::not_:
            throw fragment_error(str(p), "inner negation over until is not supported: " + str(p));
        default:
            throw fragment_error(str(p), "unsupported path operator here: " + str(p));
        }
    }
};

} // namespace

std::vector<Rat> path_values(const ProbAutomaton& a, const PathRef& psi, OptMode mode,
                             const CheckCaps& caps) {
    Checker c{a, caps};
    return c.values_of(psi, mode);
}

CheckResult check(const ProbAutomaton& a, const StateRef& f, const CheckCaps& caps) {
    Checker c{a, caps};
    CheckResult res;
    StateSet sat = c.sat_of(f);
    res.sat.resize(a.size());
    for (int s = 0; s < a.size(); ++s) res.sat[s] = sat.test(s);
    if (f->kind == StateFormula::Kind::prob) {
        OptMode mode = (f->cmp == Cmp::ge || f->cmp == Cmp::gt) ? OptMode::inf : OptMode::sup;
        res.top_values = c.values_of(f->path, mode);
        res.top_mode = mode;
    }
    return res;
}

std::vector<bool> sat_states(const ProbAutomaton& a, const StateRef& f, const CheckCaps& caps) {
    return check(a, f, caps).sat;
}

} // namespace pact
