#include "pact/oracle.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace pact {

// ---------- engine-independent extreme probabilities ----------

namespace {

// achievable values over deterministic history-dependent schedulers; the
// per-history choice tree is enumerated literally
std::set<Rat> brute_values(const ProbAutomaton& a, StateId s, const StateSet& C,
                           const StateSet& Cp, int n) {
    if (Cp.test(s)) return {Rat(1)};
    if (!C.test(s) || n == 0 || a.trans(s).empty()) return {Rat(0)};
    std::set<Rat> out;
    for (auto& mu : a.trans(s)) {
        std::vector<std::vector<Rat>> branch;
        for (auto& [v, p] : mu.entries()) {
            auto sub = brute_values(a, v, C, Cp, n - 1);
            branch.emplace_back(sub.begin(), sub.end());
        }
        std::vector<std::size_t> pick(branch.size(), 0);
        for (;;) {
            Rat total;
            std::size_t k = 0;
            for (auto& [v, p] : mu.entries()) {
                total += p * branch[k][pick[k]];
                ++k;
            }
            out.insert(total);
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == branch[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
    return out;
}

// local exact solver for one stationary policy's chain
std::vector<Rat> chain_solve(const ProbAutomaton& a, const std::vector<int>& policy,
                             const StateSet& C, const StateSet& Cp) {
    const int n = a.size();
    std::vector<char> can(n, 0);
    for (int u = 0; u < n; ++u) can[u] = Cp.test(u);
    for (bool ch = true; ch;) {
        ch = false;
        for (int u = 0; u < n; ++u) {
            if (can[u] || !C.test(u) || Cp.test(u) || policy[u] < 0) continue;
            for (auto& [v, p] : a.trans(u)[policy[u]].entries())
                if (can[v]) {
                    can[u] = 1;
                    ch = true;
                    break;
                }
        }
    }
    std::vector<int> ix(n, -1);
    std::vector<int> solved;
    for (int u = 0; u < n; ++u)
        if (can[u] && !Cp.test(u)) {
            ix[u] = static_cast<int>(solved.size());
            solved.push_back(u);
        }
    const int k = static_cast<int>(solved.size());
    std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k + 1));
    for (int i = 0; i < k; ++i) {
        int u = solved[i];
        A[i][i] += Rat(1);
        for (auto& [v, p] : a.trans(u)[policy[u]].entries()) {
            if (Cp.test(v)) A[i][k] += p;
            else if (ix[v] >= 0) A[i][ix[v]] -= p;
        }
    }
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (A[piv][col].is_zero()) ++piv;
        std::swap(A[col], A[piv]);
        Rat d = A[col][col];
        for (int j = col; j <= k; ++j) A[col][j] /= d;
        for (int r2 = 0; r2 < k; ++r2) {
            if (r2 == col || A[r2][col].is_zero()) continue;
            Rat f = A[r2][col];
            for (int j = col; j <= k; ++j) A[r2][j] -= f * A[col][j];
        }
    }
    std::vector<Rat> val(n);
    for (int u = 0; u < n; ++u)
        if (Cp.test(u)) val[u] = Rat(1);
    for (int i = 0; i < k; ++i) val[solved[i]] = A[i][k];
    return val;
}

std::vector<std::pair<Rat, Rat>> brute_unbounded_all(const ProbAutomaton& a, const StateSet& C,
                                                     const StateSet& Cp) {
    const int n = a.size();
    std::vector<int> policy(n, -1);
    std::vector<int> vary;
    for (int u = 0; u < n; ++u)
        if (C.test(u) && !Cp.test(u) && !a.trans(u).empty()) {
            policy[u] = 0;
            if (a.trans(u).size() > 1) vary.push_back(u);
        }
    std::vector<std::pair<Rat, Rat>> extrema(n, {Rat(1), Rat(0)}); // (inf, sup)
    std::vector<std::size_t> pick(vary.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < vary.size(); ++i) policy[vary[i]] = static_cast<int>(pick[i]);
        auto val = chain_solve(a, policy, C, Cp);
        for (int u = 0; u < n; ++u) {
            if (val[u] < extrema[u].first) extrema[u].first = val[u];
            if (val[u] > extrema[u].second) extrema[u].second = val[u];
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == a.trans(vary[i]).size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return extrema;
}

} // namespace

std::set<Rat> brute_bounded_values(const ProbAutomaton& a, StateId s, const StateSet& C,
                                   const StateSet& Cp, int n) {
    return brute_values(a, s, C, Cp, n);
}

std::pair<Rat, Rat> brute_bounded_extrema(const ProbAutomaton& a, StateId s, const StateSet& C,
                                          const StateSet& Cp, int n) {
    auto v = brute_values(a, s, C, Cp, n);
    return {*v.begin(), *v.rbegin()};
}

std::pair<Rat, Rat> brute_unbounded_extrema(const ProbAutomaton& a, StateId s, const StateSet& C,
                                            const StateSet& Cp) {
    return brute_unbounded_all(a, C, Cp)[s];
}

// ---------- the satisfaction-set lattice refinement ----------

namespace {

struct Ctx {
    const ProbAutomaton& a;
    FormulaBudget b;
    std::vector<int> cid;
    std::vector<StateRef> cell_formula; // Sat(cell_formula[c]) == cell c

    // recorded when the watched pair first splits
    int watch_s = -1, watch_r = -1;
    std::optional<StateRef> watch_formula;
    Rat watch_left, watch_right;
    std::string watch_desc;

    int num_cells() const { return *std::max_element(cid.begin(), cid.end()) + 1; }

    StateSet union_of(unsigned mask) const {
        StateSet out(a.size());
        for (int s = 0; s < a.size(); ++s)
            if ((mask >> cid[s]) & 1u) out.set(s);
        return out;
    }

    StateRef union_formula(unsigned mask) const {
        StateRef f = s_false();
        for (int c = 0; c < num_cells(); ++c)
            if ((mask >> c) & 1u) f = s_or_s(f, cell_formula[c]);
        return f;
    }

    void init_from_labels() {
        std::map<std::vector<int>, int> seen;
        cid.assign(a.size(), 0);
        for (int s = 0; s < a.size(); ++s) {
            auto [it, fresh] = seen.emplace(a.labels[s], static_cast<int>(seen.size()));
            cid[s] = it->second;
        }
        cell_formula.assign(seen.size(), nullptr);
        for (auto& [labels, c] : seen) {
            StateRef f = s_true();
            for (std::size_t p = 0; p < a.props.size(); ++p) {
                bool has = std::binary_search(labels.begin(), labels.end(), static_cast<int>(p));
                StateRef at = s_atom(a.props[p]);
                f = s_and_s(f, has ? at : s_not_s(at));
            }
            cell_formula[c] = f;
        }
    }

    // split by (inf, sup) signatures of one event; refreshes cell formulas
    // with threshold pins against every sibling
    bool split_event(const std::vector<std::pair<Rat, Rat>>& vals, const PathRef& event,
                     const std::string& desc) {
        const int nc = num_cells();
        std::map<std::pair<int, std::pair<Rat, Rat>>, int> groups;
        std::vector<int> next(a.size());
        for (int s = 0; s < a.size(); ++s) {
            auto [it, fresh] = groups.emplace(std::make_pair(cid[s], vals[s]),
                                              static_cast<int>(groups.size()));
            next[s] = it->second;
        }
        if (static_cast<int>(groups.size()) == nc) return false;
        std::vector<StateRef> next_formula(groups.size());
        for (auto& [key, g] : groups) {
            StateRef f = cell_formula[key.first];
            for (auto& [key2, g2] : groups) {
                if (g2 == g || key2.first != key.first) continue;
                auto [inf_me, sup_me] = key.second;
                auto [inf_sib, sup_sib] = key2.second;
                if (inf_me != inf_sib) {
                    if (inf_me > inf_sib) f = s_and_s(f, s_prob(Cmp::ge, inf_me, event));
                    else f = s_and_s(f, s_not_s(s_prob(Cmp::ge, inf_sib, event)));
                } else {
                    if (sup_me < sup_sib) f = s_and_s(f, s_prob(Cmp::le, sup_me, event));
                    else f = s_and_s(f, s_not_s(s_prob(Cmp::le, sup_sib, event)));
                }
            }
            next_formula[g] = f;
        }
        if (watch_s >= 0 && !watch_formula && cid[watch_s] == cid[watch_r] &&
            next[watch_s] != next[watch_r]) {
            auto [inf_s, sup_s] = vals[watch_s];
            auto [inf_r, sup_r] = vals[watch_r];
            if (inf_s != inf_r) {
                Rat q = inf_s > inf_r ? inf_s : inf_r;
                StateRef f = s_prob(Cmp::ge, q, event);
                watch_formula = inf_s > inf_r ? f : s_not_s(f);
                watch_left = inf_s;
                watch_right = inf_r;
            } else {
                Rat q = sup_s < sup_r ? sup_s : sup_r;
                StateRef f = s_prob(Cmp::le, q, event);
                watch_formula = sup_s < sup_r ? f : s_not_s(f);
                watch_left = sup_s;
                watch_right = sup_r;
            }
            watch_desc = desc;
        }
        std::map<int, int> remap;
        for (int s = 0; s < a.size(); ++s) {
            auto [it, fresh] = remap.emplace(next[s], static_cast<int>(remap.size()));
            next[s] = it->second;
        }
        std::vector<StateRef> remapped(remap.size());
        for (auto& [old_id, new_id] : remap) remapped[new_id] = next_formula[old_id];
        cell_formula = std::move(remapped);
        cid = std::move(next);
        return true;
    }

    bool round() {
        const int nc = num_cells();
        if (static_cast<std::size_t>(nc) > b.cell_cap)
            throw resource_cap_error("oracle-cells", "lattice cell count exceeds cap " +
                                                         std::to_string(b.cell_cap));
        const unsigned top = 1u << nc;
        bool changed = false;
        const bool bounded = b.fragment == Fragment::pctl_minus_i ||
                             b.fragment == Fragment::pctl_minus || b.fragment == Fragment::pctl;
        const bool unbounded = b.fragment == Fragment::pctl_no_x || b.fragment == Fragment::pctl;
        const bool with_x = b.fragment != Fragment::pctl_no_x;
        if (with_x) {
            for (unsigned m = 1; m < top - 1; ++m) {
                StateSet U = union_of(m);
                std::vector<std::pair<Rat, Rat>> vals(a.size());
                for (int s = 0; s < a.size(); ++s) {
                    bool first = true;
                    Rat mn, mx;
                    for (auto& mu : a.trans(s)) {
                        Rat q = mu.mass(U);
                        if (first) {
                            mn = mx = q;
                            first = false;
                        } else {
                            if (q < mn) mn = q;
                            if (q > mx) mx = q;
                        }
                    }
                    vals[s] = {mn, mx};
                }
                if (split_event(vals, p_next(p_state(union_formula(m))), "X event"))
                    changed = true;
            }
        }
        if (bounded) {
            int maxj = b.depth;
            for (unsigned m1 = 1; m1 < top; ++m1)
                for (unsigned m2 = 1; m2 < top; ++m2)
                    for (int j = 1; j <= maxj; ++j) {
                        StateSet C = union_of(m1), Cp = union_of(m2);
                        std::vector<std::pair<Rat, Rat>> vals(a.size());
                        for (int s = 0; s < a.size(); ++s)
                            vals[s] = brute_bounded_extrema(a, s, C, Cp, j);
                        PathRef ev = p_buntil(p_state(union_formula(m1)), j,
                                              p_state(union_formula(m2)));
                        if (split_event(vals, ev, "bounded until")) changed = true;
                    }
        }
        if (unbounded) {
            for (unsigned m1 = 1; m1 < top; ++m1)
                for (unsigned m2 = 1; m2 < top; ++m2) {
                    StateSet C = union_of(m1), Cp = union_of(m2);
                    auto all = brute_unbounded_all(a, C, Cp);
                    PathRef ev =
                        p_until(p_state(union_formula(m1)), p_state(union_formula(m2)));
                    if (split_event(all, ev, "until")) changed = true;
                }
        }
        return changed;
    }

    void run() {
        init_from_labels();
        int rounds = 0;
        for (;;) {
            if (b.nesting >= 0 && rounds >= b.nesting) break;
            if (!round()) break;
            ++rounds;
        }
    }
};

// ---------- star fragments: subsets of class-trace space ----------

using Trace = std::vector<int>;
using TraceDist = std::map<Trace, Rat>;

struct StarCtx {
    const ProbAutomaton& a;
    std::vector<int> cid;
    std::size_t work_cap;
    std::size_t work_used = 0;
    std::map<std::pair<int, int>, std::vector<TraceDist>> memo;

    const std::vector<TraceDist>& dists(int s, int len) {
        auto key = std::make_pair(s, len);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<TraceDist> out;
        if (len == 1) {
            out.push_back({{Trace{cid[s]}, Rat(1)}});
        } else if (a.trans(s).empty()) {
            Trace t(len, -1);
            t[0] = cid[s];
            out.push_back({{t, Rat(1)}});
        } else {
            std::set<TraceDist> dedup;
            for (auto& mu : a.trans(s)) {
                std::vector<StateId> succ;
                for (auto& [v, p] : mu.entries()) succ.push_back(v);
                std::vector<const std::vector<TraceDist>*> subs;
                for (auto v : succ) subs.push_back(&dists(v, len - 1));
                std::vector<std::size_t> pick(succ.size(), 0);
                for (;;) {
                    TraceDist d;
                    for (std::size_t k = 0; k < succ.size(); ++k) {
                        Rat p = mu.at(succ[k]);
                        for (auto& [t, q] : (*subs[k])[pick[k]]) {
                            Trace tr;
                            tr.reserve(t.size() + 1);
                            tr.push_back(cid[s]);
                            tr.insert(tr.end(), t.begin(), t.end());
                            d[tr] += p * q;
                        }
                    }
                    dedup.insert(std::move(d));
                    std::size_t i = 0;
                    while (i < pick.size() && ++pick[i] == subs[i]->size()) pick[i++] = 0;
                    if (i == pick.size()) break;
                }
            }
            out.assign(dedup.begin(), dedup.end());
        }
        return memo.emplace(key, std::move(out)).first->second;
    }

    // is every event value of d matched from above by some member of V?
    // exhaustive over subsets of supp(d), smallest first; positive-margin
    // tails prune the search
    struct Outcome {
        bool dominated;
        std::vector<Trace> event;
    };
    Outcome dominated(const TraceDist& d, const std::vector<TraceDist>& V) {
        std::vector<Trace> supp;
        for (auto& [t, p] : d) supp.push_back(t);
        const std::size_t n = supp.size(), m = V.size();
        std::vector<std::vector<Rat>> margin(m, std::vector<Rat>(n));
        for (std::size_t e = 0; e < m; ++e)
            for (std::size_t k = 0; k < n; ++k) {
                auto it = V[e].find(supp[k]);
                margin[e][k] = d.at(supp[k]) - (it == V[e].end() ? Rat(0) : it->second);
            }
        std::vector<std::vector<Rat>> tail(m, std::vector<Rat>(n + 1));
        for (std::size_t e = 0; e < m; ++e)
            for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
                tail[e][k] = tail[e][k + 1];
                if (margin[e][k].sign() > 0) tail[e][k] = tail[e][k] + margin[e][k];
            }
        std::vector<Rat> cur(m);
        std::vector<int> chosen;
        std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
            if (++work_used > work_cap)
                throw resource_cap_error("oracle-work",
                                         "star-fragment subset search exceeds work cap");
            if (!chosen.empty()) {
                bool all_pos = true;
                for (std::size_t e = 0; e < m; ++e)
                    if (cur[e].sign() <= 0) { all_pos = false; break; }
                if (all_pos) return true;
            }
            if (k == n) return false;
            for (std::size_t e = 0; e < m; ++e)
                if ((cur[e] + tail[e][k]).sign() <= 0) return false;
            chosen.push_back(static_cast<int>(k));
            for (std::size_t e = 0; e < m; ++e) cur[e] += margin[e][k];
            if (dfs(k + 1)) return true;
            chosen.pop_back();
            for (std::size_t e = 0; e < m; ++e) cur[e] -= margin[e][k];
            return dfs(k + 1);
        };
        if (dfs(0)) {
            std::vector<Trace> ev;
            for (int k : chosen) ev.push_back(supp[k]);
            return {false, ev};
        }
        return {true, {}};
    }
};

std::vector<int> star_partition(const ProbAutomaton& a, const FormulaBudget& b,
                                StarCtx** ctx_out = nullptr,
                                std::vector<Trace>* pair_event = nullptr, int ws = -1,
                                int wr = -1, std::vector<int>* event_cid = nullptr) {
    // start from label cells, refine pairwise on length-(depth+1) trace events
    std::map<std::vector<int>, int> seen;
    std::vector<int> cid(a.size());
    for (int s = 0; s < a.size(); ++s) {
        auto [it, fresh] = seen.emplace(a.labels[s], static_cast<int>(seen.size()));
        cid[s] = it->second;
    }
    const int len = b.depth + 1;
    for (;;) {
        StarCtx ctx{a, cid, b.work_cap, 0, {}};
        bool changed = false;
        // pivot split inside every cell
        int nc = *std::max_element(cid.begin(), cid.end()) + 1;
        std::vector<std::vector<int>> blocks(nc);
        for (int s = 0; s < a.size(); ++s) blocks[cid[s]].push_back(s);
        std::vector<int> next(a.size());
        int id = 0;
        for (auto& blk : blocks) {
            std::vector<int> rest = blk;
            while (!rest.empty()) {
                int p = rest.front();
                std::vector<int> mine, other;
                for (int s : rest) {
                    if (s == p) {
                        mine.push_back(s);
                        continue;
                    }
                    auto& Vs = ctx.dists(s, len);
                    auto& Vp = ctx.dists(p, len);
                    bool ok = true;
                    std::vector<Trace> ev;
                    for (auto& d : Vs) {
                        auto o = ctx.dominated(d, Vp);
                        if (!o.dominated) {
                            ok = false;
                            ev = o.event;
                            break;
                        }
                    }
                    if (ok)
                        for (auto& d : Vp) {
                            auto o = ctx.dominated(d, Vs);
                            if (!o.dominated) {
                                ok = false;
                                ev = o.event;
                                break;
                            }
                        }
                    if (ok) mine.push_back(s);
                    else {
                        other.push_back(s);
                        if (pair_event && ((s == ws && p == wr) || (s == wr && p == ws)) &&
                            pair_event->empty()) {
                            *pair_event = ev;
                            if (event_cid) *event_cid = cid;
                        }
                    }
                }
                for (int s : mine) next[s] = id;
                ++id;
                if (!other.empty()) changed = true;
                rest = std::move(other);
            }
        }
        if (!changed) {
            if (ctx_out) *ctx_out = nullptr;
            return cid;
        }
        std::map<int, int> remap;
        for (int s = 0; s < a.size(); ++s) {
            auto [it, fresh] = remap.emplace(next[s], static_cast<int>(remap.size()));
            cid[s] = it->second;
        }
    }
}

} // namespace

std::vector<int> oracle_partition(const ProbAutomaton& a, const FormulaBudget& b) {
    if (b.fragment == Fragment::pctl_star_minus_i) return star_partition(a, b);
    Ctx ctx{a, b, {}, {}};
    ctx.run();
    return ctx.cid;
}

EquivResult logical_equiv(const ProbAutomaton& a, StateId s, StateId r, const FormulaBudget& b) {
    EquivResult res;
    if (b.fragment == Fragment::pctl_star_minus_i) {
        std::vector<Trace> ev;
        std::vector<int> ev_cid;
        auto cid = star_partition(a, b, nullptr, &ev, s, r, &ev_cid);
        res.equivalent = cid[s] == cid[r];
        if (!res.equivalent && !ev.empty()) {
            // the event is a set of class traces; describe it
            std::string d = "trace event {";
            for (auto& t : ev) {
                d += " <";
                for (std::size_t k = 0; k < t.size(); ++k)
                    d += (k ? "," : "") + std::to_string(t[k]);
                d += ">";
            }
            res.event_desc = d + " }";
        }
        return res;
    }
    Ctx ctx{a, b, {}, {}};
    ctx.watch_s = s;
    ctx.watch_r = r;
    ctx.run();
    res.equivalent = ctx.cid[s] == ctx.cid[r];
    if (!res.equivalent) {
        if (!ctx.watch_formula && !a.labels_equal(s, r)) {
            // an atom profile already separates them
            StateRef f = s_true();
            for (std::size_t p = 0; p < a.props.size(); ++p) {
                bool at_s = std::binary_search(a.labels[s].begin(), a.labels[s].end(),
                                               static_cast<int>(p));
                bool at_r = std::binary_search(a.labels[r].begin(), a.labels[r].end(),
                                               static_cast<int>(p));
                if (at_s == at_r) continue;
                StateRef at = s_atom(a.props[p]);
                f = at_s ? at : s_not_s(at);
                break;
            }
            res.formula = f;
            res.event_desc = "different labels";
        } else if (ctx.watch_formula) {
            res.formula = ctx.watch_formula;
            res.value_left = ctx.watch_left;
            res.value_right = ctx.watch_right;
            res.event_desc = ctx.watch_desc;
        }
    }
    return res;
}

std::vector<PathRef> enumerate_path_events(const ProbAutomaton& a, const FormulaBudget& b) {
    Ctx ctx{a, b, {}, {}};
    ctx.init_from_labels();
    std::vector<PathRef> out;
    const unsigned top = 1u << ctx.num_cells();
    if (b.fragment != Fragment::pctl_no_x)
        for (unsigned m = 1; m < top; ++m) out.push_back(p_next(p_state(ctx.union_formula(m))));
    if (b.fragment == Fragment::pctl_minus_i || b.fragment == Fragment::pctl_minus ||
        b.fragment == Fragment::pctl)
        for (unsigned m1 = 1; m1 < top; ++m1)
            for (unsigned m2 = 1; m2 < top; ++m2)
                for (int j = 1; j <= b.depth; ++j)
                    out.push_back(p_buntil(p_state(ctx.union_formula(m1)), j,
                                           p_state(ctx.union_formula(m2))));
    if (b.fragment == Fragment::pctl_no_x || b.fragment == Fragment::pctl)
        for (unsigned m1 = 1; m1 < top; ++m1)
            for (unsigned m2 = 1; m2 < top; ++m2)
                out.push_back(
                    p_until(p_state(ctx.union_formula(m1)), p_state(ctx.union_formula(m2))));
    return out;
}

// ---------- safe-fragment preorder ----------

namespace {

struct SafeCtx {
    const ProbAutomaton& a;
    FormulaBudget b;
    std::vector<StateSet> sets;         // lattice of safe-definable sets
    std::vector<StateRef> set_formula;  // matching formulas

    void add(const StateSet& s, const StateRef& f) {
        for (auto& t : sets)
            if (t == s) return;
        sets.push_back(s);
        set_formula.push_back(f);
    }

    void close_lattice() {
        // close under union and intersection
        for (bool ch = true; ch;) {
            ch = false;
            std::size_t n = sets.size();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    StateSet u = sets[i] | sets[j];
                    StateSet w = sets[i] & sets[j];
                    std::size_t before = sets.size();
                    add(u, s_or_s(set_formula[i], set_formula[j]));
                    add(w, s_and_s(set_formula[i], set_formula[j]));
                    if (sets.size() != before) ch = true;
                }
            if (sets.size() > 4096)
                throw resource_cap_error("safe-lattice", "safe lattice exceeds cap");
        }
    }

    void init() {
        add(a.all_states(), s_true());
        add(StateSet(a.size()), s_false());
        for (std::size_t p = 0; p < a.props.size(); ++p) {
            add(a.states_with_prop(static_cast<int>(p)), s_atom(a.props[p]));
            add(a.states_with_prop(static_cast<int>(p)).complement(),
                s_not(s_atom(a.props[p])));
        }
        close_lattice();
    }

    struct Event {
        PathRef psi;
        std::vector<Rat> inf; // per state
    };

    std::vector<Event> events() {
        std::vector<Event> out;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            Event e;
            e.psi = p_next(p_state(set_formula[i]));
            e.inf.resize(a.size());
            for (int s = 0; s < a.size(); ++s) {
                bool first = true;
                for (auto& mu : a.trans(s)) {
                    Rat q = mu.mass(sets[i]);
                    if (first || q < e.inf[s]) e.inf[s] = q;
                    first = false;
                }
            }
            out.push_back(std::move(e));
        }
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j) {
                for (int n = 1; n <= b.depth; ++n) {
                    Event e;
                    e.psi = p_buntil(p_state(set_formula[i]), n, p_state(set_formula[j]));
                    e.inf.resize(a.size());
                    for (int s = 0; s < a.size(); ++s)
                        e.inf[s] = brute_bounded_extrema(a, s, sets[i], sets[j], n).first;
                    out.push_back(std::move(e));
                }
                Event e;
                e.psi = p_until(p_state(set_formula[i]), p_state(set_formula[j]));
                e.inf.resize(a.size());
                auto all = brute_unbounded_all(a, sets[i], sets[j]);
                for (int s = 0; s < a.size(); ++s) e.inf[s] = all[s].first;
                out.push_back(std::move(e));
            }
        return out;
    }

    // enrich the lattice with the sat-sets of P>=q over observed inf values
    bool enrich(const std::vector<Event>& evs) {
        std::size_t before = sets.size();
        for (auto& e : evs) {
            std::set<Rat> qs(e.inf.begin(), e.inf.end());
            for (auto& q : qs) {
                if (q.sign() <= 0) continue;
                StateSet sat(a.size());
                for (int s = 0; s < a.size(); ++s)
                    if (e.inf[s] >= q) sat.set(s);
                add(sat, s_prob(Cmp::ge, q, e.psi));
            }
        }
        if (sets.size() == before) return false;
        close_lattice();
        return true;
    }
};

} // namespace

Relation oracle_safe_preorder(const ProbAutomaton& a, const FormulaBudget& b) {
    SafeCtx ctx{a, b, {}, {}};
    ctx.init();
    std::vector<SafeCtx::Event> evs = ctx.events();
    int rounds = 0;
    while ((b.nesting < 0 || rounds < b.nesting) && ctx.enrich(evs)) {
        evs = ctx.events();
        ++rounds;
        if (rounds > a.size() + 2) break;
    }
    Relation rel(a.size(), Relation::Kind::preorder);
    for (int s = 0; s < a.size(); ++s)
        for (int r = 0; r < a.size(); ++r) {
            if (s == r) continue;
            bool below = true;
            // s below r: every safe formula satisfied by r holds at s; for
            // the P>= events that is inf_s >= inf_r, for plain sets
            // membership containment
            for (std::size_t i = 0; i < ctx.sets.size() && below; ++i)
                if (ctx.sets[i].test(r) && !ctx.sets[i].test(s)) below = false;
            for (auto& e : evs) {
                if (!below) break;
                if (e.inf[s] < e.inf[r]) below = false;
            }
            if (below) rel.set(s, r);
        }
    return rel;
}

PreorderResult logical_preorder(const ProbAutomaton& a, StateId s, StateId r,
                                const FormulaBudget& b) {
    SafeCtx ctx{a, b, {}, {}};
    ctx.init();
    auto evs = ctx.events();
    int rounds = 0;
    while ((b.nesting < 0 || rounds < b.nesting) && ctx.enrich(evs)) {
        evs = ctx.events();
        ++rounds;
        if (rounds > a.size() + 2) break;
    }
    PreorderResult res;
    for (std::size_t i = 0; i < ctx.sets.size(); ++i)
        if (ctx.sets[i].test(r) && !ctx.sets[i].test(s)) {
            res.below = false;
            res.refuting = ctx.set_formula[i];
            return res;
        }
    for (auto& e : evs)
        if (e.inf[s] < e.inf[r]) {
            res.below = false;
            res.refuting = s_prob(Cmp::ge, e.inf[r], e.psi);
            return res;
        }
    return res;
}

StateRef distinguishing_state_formula(const ProbAutomaton& a, const Relation& classes,
                                      const StateSet& target, const FormulaBudget& b) {
    Ctx ctx{a, b, {}, {}};
    ctx.run();
    auto class_cid = classes.class_of();
    // every pair separated by `classes` must be separated by the oracle cells
    for (int s = 0; s < a.size(); ++s)
        for (int r = 0; r < a.size(); ++r)
            if (class_cid[s] != class_cid[r] && ctx.cid[s] == ctx.cid[r])
                throw fragment_error(a.display(s) + "," + a.display(r),
                                     "classes not separable under the oracle budget: " +
                                         a.display(s) + " vs " + a.display(r));
    // target must be a union of classes
    for (int s = 0; s < a.size(); ++s)
        for (int r = 0; r < a.size(); ++r)
            if (class_cid[s] == class_cid[r] && target.test(s) != target.test(r))
                throw std::invalid_argument("target is not a union of classes");
    StateRef f = s_false();
    for (int c = 0; c < ctx.num_cells(); ++c) {
        bool inside = false;
        for (int s = 0; s < a.size(); ++s)
            if (ctx.cid[s] == c) {
                inside = target.test(s);
                break;
            }
        if (inside) f = s_or_s(f, ctx.cell_formula[c]);
    }
    return f;
}

} // namespace pact
