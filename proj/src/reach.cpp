#include "pact/reach.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace pact {

namespace {

using Sparse = std::vector<std::pair<int, Rat>>;

// Minimal MDP view shared by the unbounded engine and the acceptor products.
struct Mdp {
    std::vector<std::vector<Sparse>> act;
    int size() const { return static_cast<int>(act.size()); }
};

Mdp to_mdp(const ProbAutomaton& a) {
    Mdp m;
    m.act.resize(a.size());
    for (int s = 0; s < a.size(); ++s)
        for (auto& d : a.trans(s)) m.act[s].push_back(d.entries());
    return m;
}

// Exact solve of (I - P) x = b by Gauss-Jordan; P strictly substochastic on
// the solved block, so the system is nonsingular.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!A[r][col].is_zero()) { piv = r; break; }
        assert(piv >= 0 && "singular reachability system");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        Rat d = A[col][col];
        for (int j = col; j < n; ++j) A[col][j] /= d;
        b[col] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            Rat f = A[r][col];
            for (int j = col; j < n; ++j) A[r][j] -= f * A[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

struct UnboundedSolution {
    std::vector<Rat> val;
    std::vector<int> policy; // -1 where no choice matters
};

// Chain evaluation of one stationary policy: 1 on target, 0 outside the
// fixed-zero set's complement handled by callers; states whose chain cannot
// reach the target evaluate to 0.
std::vector<Rat> eval_policy(const Mdp& m, const std::vector<char>& interior,
                             const std::vector<char>& target, const std::vector<int>& policy) {
    const int n = m.size();
    std::vector<char> can(target.begin(), target.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u) {
            if (!interior[u] || can[u]) continue;
            for (auto& [v, p] : m.act[u][policy[u]])
                if (can[v]) { can[u] = 1; changed = true; break; }
        }
    }
    std::vector<int> ix(n, -1);
    std::vector<int> solved;
    for (int u = 0; u < n; ++u)
        if (interior[u] && can[u]) {
            ix[u] = static_cast<int>(solved.size());
            solved.push_back(u);
        }
    const int k = static_cast<int>(solved.size());
    std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k));
    std::vector<Rat> b(k);
    for (int i = 0; i < k; ++i) {
        int u = solved[i];
        A[i][i] = Rat(1);
        for (auto& [v, p] : m.act[u][policy[u]]) {
            if (target[v]) b[i] += p;
            else if (ix[v] >= 0) A[i][ix[v]] -= p;
        }
    }
    auto x = solve_linear(std::move(A), std::move(b));
    std::vector<Rat> val(n);
    for (int u = 0; u < n; ++u)
        if (target[u]) val[u] = Rat(1);
    for (int i = 0; i < k; ++i) val[solved[i]] = x[i];
    return val;
}

UnboundedSolution mdp_unbounded(const Mdp& m, const std::vector<char>& inC,
                                const std::vector<char>& inCp, OptMode mode) {
    const int n = m.size();
    std::vector<char> interior(n, 0);
    if (mode == OptMode::sup) {
        // states that can reach Cp through C under some scheduler
        std::vector<char> can(inCp.begin(), inCp.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < n; ++u) {
                if (can[u] || !inC[u] || inCp[u]) continue;
                for (auto& acts = m.act[u]; auto& d : acts) {
                    for (auto& [v, p] : d)
                        if (can[v]) { can[u] = 1; changed = true; break; }
                    if (can[u]) break;
                }
            }
        }
        for (int u = 0; u < n; ++u) interior[u] = can[u] && !inCp[u];
    } else {
        // greatest set of states owning a scheduler that avoids Cp entirely;
        // everything else (minus Cp) has a positive value under every policy
        std::vector<char> Z(n, 0);
        for (int u = 0; u < n; ++u) Z[u] = !inCp[u];
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < n; ++u) {
                if (!Z[u] || !inC[u]) continue; // outside C the run is already dead
                bool has_safe = false;
                for (auto& d : m.act[u]) {
                    bool safe = true;
                    for (auto& [v, p] : d)
                        if (!Z[v]) { safe = false; break; }
                    if (safe) { has_safe = true; break; }
                }
                if (!has_safe && !m.act[u].empty()) { Z[u] = 0; changed = true; }
                // no transitions at all: the run stops, the event never happens
            }
        }
        for (int u = 0; u < n; ++u) interior[u] = !Z[u] && !inCp[u];
    }
    for (int u = 0; u < n; ++u)
        if (m.act[u].empty()) interior[u] = 0;

    UnboundedSolution sol;
    sol.policy.assign(n, -1);
    for (int u = 0; u < n; ++u)
        if (interior[u]) sol.policy[u] = 0;
    std::vector<char> target(inCp.begin(), inCp.end());

    for (;;) {
        sol.val = eval_policy(m, interior, target, sol.policy);
        bool improved = false;
        for (int u = 0; u < n; ++u) {
            if (!interior[u]) continue;
            int best_i = -1;
            Rat best;
            for (int i = 0; i < static_cast<int>(m.act[u].size()); ++i) {
                Rat q;
                for (auto& [v, p] : m.act[u][i]) q += p * sol.val[v];
                if (best_i < 0 || (mode == OptMode::sup ? q > best : q < best)) {
                    best_i = i;
                    best = q;
                }
            }
            bool strictly = mode == OptMode::sup ? best > sol.val[u] : best < sol.val[u];
            if (strictly) {
                sol.policy[u] = best_i;
                improved = true;
            }
        }
        if (!improved) break;
    }
    return sol;
}

std::vector<char> to_mask(const StateSet& s) {
    std::vector<char> m(s.universe(), 0);
    for (int u : s.members()) m[u] = 1;
    return m;
}

} // namespace

// ---------- bounded ----------

std::vector<std::vector<Rat>> bounded_reach_values(const ProbAutomaton& a, const StateSet& C,
                                                   const StateSet& Cp, int n, OptMode mode) {
    const int ns = a.size();
    std::vector<std::vector<Rat>> V(n + 1, std::vector<Rat>(ns));
    for (int u = 0; u < ns; ++u)
        if (Cp.test(u)) V[0][u] = Rat(1);
    for (int k = 1; k <= n; ++k) {
        for (int u = 0; u < ns; ++u) {
            if (Cp.test(u)) {
                V[k][u] = Rat(1);
                continue;
            }
            if (!C.test(u) || a.trans(u).empty()) continue;
            bool first = true;
            Rat best;
            for (auto& mu : a.trans(u)) {
                Rat q;
                for (auto& [v, p] : mu.entries()) q += p * V[k - 1][v];
                if (first || (mode == OptMode::sup ? q > best : q < best)) {
                    best = q;
                    first = false;
                }
            }
            V[k][u] = best;
        }
    }
    return V;
}

ReachResult bounded_reach(const ProbAutomaton& a, StateId s, const StateSet& C, const StateSet& Cp,
                          int n, OptMode mode) {
    auto V = bounded_reach_values(a, C, Cp, n, mode);
    ReachResult res;
    res.value = V[n][s];
    res.witness.kind = PolicyWitness::Kind::finite_horizon;
    // step t has n - t steps remaining; pick the lowest optimal index
    for (int t = 0; t < n; ++t) {
        int rem = n - t;
        for (int u = 0; u < a.size(); ++u) {
            if (Cp.test(u) || !C.test(u) || a.trans(u).empty()) continue;
            int best_i = -1;
            Rat best;
            for (int i = 0; i < static_cast<int>(a.trans(u).size()); ++i) {
                Rat q;
                for (auto& [v, p] : a.trans(u)[i].entries()) q += p * V[rem - 1][v];
                if (best_i < 0 || (mode == OptMode::sup ? q > best : q < best)) {
                    best_i = i;
                    best = q;
                }
            }
            res.witness.choice[{u, 0, t}] = best_i;
        }
    }
    return res;
}

Rat replay_bounded(const ProbAutomaton& a, StateId s, const StateSet& C, const StateSet& Cp, int n,
                   const PolicyWitness& w) {
    // forward mass propagation under the fixed step-indexed policy
    std::map<int, Rat> mass{{s, Rat(1)}};
    Rat acc;
    for (int t = 0; t <= n; ++t) {
        std::map<int, Rat> next;
        for (auto& [u, p] : mass) {
            if (Cp.test(u)) {
                acc += p;
                continue;
            }
            if (!C.test(u) || t == n || a.trans(u).empty()) continue;
            auto it = w.choice.find({u, 0, t});
            if (it == w.choice.end()) continue;
            for (auto& [v, q] : a.trans(u)[it->second].entries()) next[v] += p * q;
        }
        mass.swap(next);
    }
    return acc;
}

// ---------- unbounded ----------

std::vector<Rat> unbounded_reach_values(const ProbAutomaton& a, const StateSet& C,
                                        const StateSet& Cp, OptMode mode) {
    return mdp_unbounded(to_mdp(a), to_mask(C), to_mask(Cp), mode).val;
}

ReachResult unbounded_reach(const ProbAutomaton& a, StateId s, const StateSet& C,
                            const StateSet& Cp, OptMode mode) {
    auto sol = mdp_unbounded(to_mdp(a), to_mask(C), to_mask(Cp), mode);
    ReachResult res;
    res.value = sol.val[s];
    res.witness.kind = PolicyWitness::Kind::stationary;
    for (int u = 0; u < a.size(); ++u)
        if (sol.policy[u] >= 0) res.witness.choice[{u, 0, -1}] = sol.policy[u];
    return res;
}

Rat replay_unbounded(const ProbAutomaton& a, StateId s, const StateSet& C, const StateSet& Cp,
                     const PolicyWitness& w) {
    Mdp m = to_mdp(a);
    const int n = m.size();
    std::vector<char> interior(n, 0);
    std::vector<int> policy(n, -1);
    for (auto& [key, i] : w.choice) {
        auto [u, node, step] = key;
        policy[u] = i;
    }
    for (int u = 0; u < n; ++u)
        interior[u] = policy[u] >= 0 && C.test(u) && !Cp.test(u) && !m.act[u].empty();
    auto val = eval_policy(m, interior, to_mask(Cp), policy);
    return val[s];
}

// ---------- plain pattern cones ----------

namespace {

// DP over (state, position, alive pattern set); alive sets are interned.
struct PatternEval {
    const ProbAutomaton& a;
    std::vector<std::vector<StateSet>> pats;
    OptMode mode;
    std::map<std::pair<int, std::vector<int>>, int> node_ids; // (pos, alive) -> id
    std::map<std::tuple<int, int>, std::pair<Rat, int>> memo; // (state, node) -> (value, choice)

    PatternEval(const ProbAutomaton& a_, const PatternSet& ps, OptMode mode_)
        : a(a_), pats(ps.pruned_prefix_free().patterns()), mode(mode_) {}

    int intern(int pos, const std::vector<int>& alive) {
        auto [it, fresh] = node_ids.emplace(std::make_pair(pos, alive), static_cast<int>(node_ids.size()));
        return it->second;
    }

    // value at `s` when `s` is the `pos`-th state and `alive` matched so far
    Rat value(int s, int pos, const std::vector<int>& alive, PolicyWitness* w) {
        std::vector<int> cont;
        for (int p : alive) {
            if (!pats[p][pos].test(s)) continue;
            if (static_cast<int>(pats[p].size()) == pos + 1) return Rat(1); // full match
            cont.push_back(p);
        }
        if (cont.empty() || a.trans(s).empty()) return Rat(0);
        int node = intern(pos, cont);
        auto it = memo.find({s, node});
        if (it == memo.end()) {
            int best_i = -1;
            Rat best;
            for (int i = 0; i < static_cast<int>(a.trans(s).size()); ++i) {
                Rat q;
                for (auto& [v, pr] : a.trans(s)[i].entries())
                    q += pr * value(v, pos + 1, cont, nullptr);
                if (best_i < 0 || (mode == OptMode::sup ? q > best : q < best)) {
                    best_i = i;
                    best = q;
                }
            }
            it = memo.emplace(std::make_tuple(s, node), std::make_pair(best, best_i)).first;
        }
        if (w) w->choice[{s, node, pos}] = it->second.second;
        return it->second.first;
    }

    // after memoization, walk the policy into the witness
    void fill_witness(int s, int pos, const std::vector<int>& alive, PolicyWitness& w) {
        std::vector<int> cont;
        for (int p : alive) {
            if (!pats[p][pos].test(s)) continue;
            if (static_cast<int>(pats[p].size()) == pos + 1) return;
            cont.push_back(p);
        }
        if (cont.empty() || a.trans(s).empty()) return;
        int node = intern(pos, cont);
        auto key = std::make_tuple(s, node);
        auto it = memo.find(key);
        if (it == memo.end()) return;
        auto wkey = std::make_tuple(s, node, pos);
        if (w.choice.count(wkey)) return;
        w.choice[wkey] = it->second.second;
        for (auto& [v, pr] : a.trans(s)[it->second.second].entries()) fill_witness(v, pos + 1, cont, w);
    }

    std::vector<int> all() const {
        std::vector<int> v(pats.size());
        for (std::size_t i = 0; i < pats.size(); ++i) v[i] = static_cast<int>(i);
        return v;
    }
};

} // namespace

ReachResult pattern_opt(const ProbAutomaton& a, StateId s, const PatternSet& pats, OptMode mode) {
    PatternEval ev(a, pats, mode);
    ReachResult res;
    res.value = ev.value(s, 0, ev.all(), nullptr);
    res.witness.kind = PolicyWitness::Kind::finite_horizon;
    ev.fill_witness(s, 0, ev.all(), res.witness);
    return res;
}

std::vector<Rat> pattern_opt_values(const ProbAutomaton& a, const PatternSet& pats, OptMode mode) {
    PatternEval ev(a, pats, mode);
    std::vector<Rat> out(a.size());
    for (int s = 0; s < a.size(); ++s) out[s] = ev.value(s, 0, ev.all(), nullptr);
    return out;
}

Rat replay_pattern(const ProbAutomaton& a, StateId s, const PatternSet& pats,
                   const PolicyWitness& w) {
    // forward masses over (state, pos, alive), consulting the witness choices
    PatternEval ev(a, pats, OptMode::sup);
    struct Cfg {
        int s, pos;
        std::vector<int> alive;
        bool operator<(const Cfg& o) const {
            return std::tie(s, pos, alive) < std::tie(o.s, o.pos, o.alive);
        }
    };
    std::map<Cfg, Rat> mass{{Cfg{s, 0, ev.all()}, Rat(1)}};
    Rat acc;
    while (!mass.empty()) {
        std::map<Cfg, Rat> next;
        for (auto& [cfg, p] : mass) {
            std::vector<int> cont;
            bool matched = false;
            for (int q : cfg.alive) {
                if (!ev.pats[q][cfg.pos].test(cfg.s)) continue;
                if (static_cast<int>(ev.pats[q].size()) == cfg.pos + 1) {
                    matched = true;
                    break;
                }
                cont.push_back(q);
            }
            if (matched) {
                acc += p;
                continue;
            }
            if (cont.empty() || a.trans(cfg.s).empty()) continue;
            int node = ev.intern(cfg.pos, cont);
            auto it = w.choice.find({cfg.s, node, cfg.pos});
            if (it == w.choice.end()) continue;
            for (auto& [v, pr] : a.trans(cfg.s)[it->second].entries())
                next[Cfg{v, cfg.pos + 1, cont}] += p * pr;
        }
        mass.swap(next);
    }
    return acc;
}

// ---------- stuttering pattern cones ----------

namespace {

// Determinized acceptor for the stuttering closure: an NFA position (p, j)
// means "pattern p may still consume set j or any later one"; reading a state
// consumes one copy of some set >= j (skipped sets take zero copies) and
// accepts when the final set is consumed.
struct StutterAcceptor {
    std::vector<std::vector<StateSet>> pats;
    std::size_t node_cap;
    std::map<std::vector<int>, int> ids; // sorted (p*L+j) lists -> node id
    std::vector<std::vector<int>> nodes;

    explicit StutterAcceptor(const PatternSet& ps, std::size_t cap)
        : pats(ps.patterns()), node_cap(cap) {}

    int max_len() const {
        std::size_t m = 0;
        for (auto& p : pats) m = std::max(m, p.size());
        return static_cast<int>(m);
    }

    int intern(std::vector<int> node) {
        std::sort(node.begin(), node.end());
        node.erase(std::unique(node.begin(), node.end()), node.end());
        auto [it, fresh] = ids.emplace(node, static_cast<int>(ids.size()));
        if (fresh) {
            nodes.push_back(it->first);
            if (ids.size() > node_cap)
                throw resource_cap_error("stuttering-nodes",
                                         "acceptor subset construction exceeds node cap " +
                                             std::to_string(node_cap));
        }
        return it->second;
    }

    int initial() {
        std::vector<int> node;
        int L = max_len();
        for (int p = 0; p < static_cast<int>(pats.size()); ++p) node.push_back(p * L);
        return intern(node);
    }

    // consume automaton state v from `node`; returns (accepted, next node id)
    std::pair<bool, int> step(int node_id, int v) {
        int L = max_len();
        std::vector<int> next;
        bool accept = false;
        for (int enc : nodes[node_id]) {
            int p = enc / L, i = enc % L;
            int len = static_cast<int>(pats[p].size());
            for (int j = i; j < len; ++j) {
                if (!pats[p][j].test(v)) continue;
                if (j == len - 1) accept = true;
                else next.push_back(p * L + j);
            }
        }
        if (accept) return {true, -1};
        return {false, intern(std::move(next))};
    }
};

// Product of the automaton with the determinized acceptor plus an absorbing
// accept sink; returns the product MDP, the sink index, and seed states.
struct StutterProduct {
    Mdp mdp;
    int accept;
    std::map<std::pair<int, int>, int> index; // (aut state, node) -> product state
    StutterAcceptor acc;

    StutterProduct(const ProbAutomaton& a, const PatternSet& ps, std::size_t cap)
        : acc(ps, cap) {
        if (ps.size() == 0) {
            accept = 0;
            mdp.act.resize(1);
            return;
        }
        std::vector<std::pair<int, int>> work;
        auto get = [&](int s, int node) {
            auto [it, fresh] = index.emplace(std::make_pair(s, node), static_cast<int>(index.size()));
            if (fresh) work.emplace_back(s, node);
            return it->second;
        };
        int init = acc.initial();
        std::vector<std::pair<bool, int>> seed(a.size());
        for (int s = 0; s < a.size(); ++s) {
            seed[s] = acc.step(init, s);
            if (!seed[s].first) get(s, seed[s].second);
        }
        std::vector<std::vector<Sparse>> act;
        while (!work.empty()) {
            auto [s, node] = work.back();
            work.pop_back();
            int me = index.at({s, node});
            if (static_cast<int>(act.size()) <= me) act.resize(me + 1);
            for (auto& mu : a.trans(s)) {
                Sparse d;
                Rat to_accept;
                for (auto& [v, p] : mu.entries()) {
                    auto [ok, nxt] = acc.step(node, v);
                    if (ok) to_accept += p;
                    else d.emplace_back(get(v, nxt), p);
                }
                if (!to_accept.is_zero()) d.emplace_back(-1, to_accept); // patched below
                act[me].push_back(std::move(d));
            }
        }
        accept = static_cast<int>(index.size());
        act.resize(index.size());
        for (auto& al : act)
            for (auto& d : al) {
                std::map<int, Rat> m;
                for (auto& [v, p] : d) m[v < 0 ? accept : v] += p;
                d.assign(m.begin(), m.end());
            }
        act.push_back({Sparse{{accept, Rat(1)}}}); // accept sink self-loop
        mdp.act = std::move(act);
        seeds_ = std::move(seed);
    }

    // (accepted at step 0, product state) for a start state
    std::pair<bool, int> seed(int s) const {
        if (seeds_[s].first) return {true, -1};
        return {false, index.at({s, seeds_[s].second})};
    }

private:
    std::vector<std::pair<bool, int>> seeds_;
};

} // namespace

std::vector<Rat> stuttering_pattern_opt_values(const ProbAutomaton& a, const PatternSet& pats,
                                               OptMode mode, std::size_t node_cap) {
    std::vector<Rat> out(a.size());
    if (pats.size() == 0) return out;
    StutterProduct prod(a, pats, node_cap);
    std::vector<char> inC(prod.mdp.size(), 1);
    std::vector<char> inCp(prod.mdp.size(), 0);
    inCp[prod.accept] = 1;
    auto sol = mdp_unbounded(prod.mdp, inC, inCp, mode);
    for (int s = 0; s < a.size(); ++s) {
        auto [ok, ix] = prod.seed(s);
        out[s] = ok ? Rat(1) : sol.val[ix];
    }
    return out;
}

ReachResult stuttering_pattern_opt(const ProbAutomaton& a, StateId s, const PatternSet& pats,
                                   OptMode mode, std::size_t node_cap) {
    ReachResult res;
    res.witness.kind = PolicyWitness::Kind::stationary;
    if (pats.size() == 0) {
        res.value = Rat(0);
        return res;
    }
    StutterProduct prod(a, pats, node_cap);
    std::vector<char> inC(prod.mdp.size(), 1);
    std::vector<char> inCp(prod.mdp.size(), 0);
    inCp[prod.accept] = 1;
    auto sol = mdp_unbounded(prod.mdp, inC, inCp, mode);
    auto [ok, ix] = prod.seed(s);
    res.value = ok ? Rat(1) : sol.val[ix];
    // witness keys use (aut state, acceptor node, -1)
    for (auto& [key, px] : prod.index)
        if (sol.policy[px] >= 0) res.witness.choice[{key.first, key.second, -1}] = sol.policy[px];
    return res;
}

Rat replay_stuttering(const ProbAutomaton& a, StateId s, const PatternSet& pats,
                      const PolicyWitness& w, std::size_t node_cap) {
    if (pats.size() == 0) return Rat(0);
    StutterProduct prod(a, pats, node_cap);
    std::vector<int> policy(prod.mdp.size(), -1);
    for (auto& [key, i] : w.choice) {
        auto [u, node, step] = key;
        auto it = prod.index.find({u, node});
        if (it != prod.index.end()) policy[it->second] = i;
    }
    std::vector<char> interior(prod.mdp.size(), 0);
    std::vector<char> target(prod.mdp.size(), 0);
    target[prod.accept] = 1;
    for (int u = 0; u < prod.mdp.size(); ++u)
        interior[u] = policy[u] >= 0 && u != prod.accept && !prod.mdp.act[u].empty();
    auto val = eval_policy(prod.mdp, interior, target, policy);
    auto [ok, ix] = prod.seed(s);
    return ok ? Rat(1) : val[ix];
}

// ---------- achievable value sets ----------

namespace {

void cap_check(std::size_t size, std::size_t cap, const char* name) {
    if (size > cap)
        throw resource_cap_error(name, std::string(name) + " value-set cap " +
                                           std::to_string(cap) + " exceeded");
}

std::set<Rat> bounded_sets_rec(const ProbAutomaton& a, int u, const StateSet& C, const StateSet& Cp,
                               int k, std::size_t cap,
                               std::map<std::pair<int, int>, std::set<Rat>>& memo) {
    if (Cp.test(u)) return {Rat(1)};
    if (!C.test(u) || k == 0 || a.trans(u).empty()) return {Rat(0)};
    auto it = memo.find({u, k});
    if (it != memo.end()) return it->second;
    std::set<Rat> out;
    for (auto& mu : a.trans(u)) {
        std::vector<std::vector<Rat>> opts;
        for (auto& [v, p] : mu.entries()) {
            auto sub = bounded_sets_rec(a, v, C, Cp, k - 1, cap, memo);
            opts.emplace_back(sub.begin(), sub.end());
        }
        std::vector<std::size_t> pick(opts.size(), 0);
        for (;;) {
            Rat q;
            std::size_t j = 0;
            for (auto& [v, p] : mu.entries()) {
                q += p * opts[j][pick[j]];
                ++j;
            }
            out.insert(q);
            cap_check(out.size(), cap, "bounded-value-set");
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == opts[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
    memo[{u, k}] = out;
    return out;
}

} // namespace

std::set<Rat> bounded_value_set(const ProbAutomaton& a, StateId s, const StateSet& C,
                                const StateSet& Cp, int n, std::size_t cap) {
    std::map<std::pair<int, int>, std::set<Rat>> memo;
    return bounded_sets_rec(a, s, C, Cp, n, cap, memo);
}

std::vector<std::set<Rat>> bounded_value_sets(const ProbAutomaton& a, const StateSet& C,
                                              const StateSet& Cp, int n, std::size_t cap) {
    std::map<std::pair<int, int>, std::set<Rat>> memo;
    std::vector<std::set<Rat>> out(a.size());
    for (int s = 0; s < a.size(); ++s) out[s] = bounded_sets_rec(a, s, C, Cp, n, cap, memo);
    return out;
}

namespace {

// enumerate stationary policies of an Mdp and collect per-state chain values
std::vector<std::set<Rat>> stationary_sets(const Mdp& m, const std::vector<char>& interior,
                                           const std::vector<char>& target, std::size_t cap) {
    const int n = m.size();
    std::vector<int> vary;
    std::size_t total = 1;
    for (int u = 0; u < n; ++u)
        if (interior[u] && m.act[u].size() > 1) {
            vary.push_back(u);
            total *= m.act[u].size();
            cap_check(total, cap, "stationary-policy-enum");
        }
    std::vector<std::set<Rat>> out(n);
    std::vector<int> policy(n, -1);
    for (int u = 0; u < n; ++u)
        if (interior[u]) policy[u] = 0;
    std::vector<std::size_t> pick(vary.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < vary.size(); ++i) policy[vary[i]] = static_cast<int>(pick[i]);
        auto val = eval_policy(m, interior, target, policy);
        for (int u = 0; u < n; ++u) out[u].insert(val[u]);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == m.act[vary[i]].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

} // namespace

std::vector<std::set<Rat>> unbounded_stationary_value_sets(const ProbAutomaton& a,
                                                           const StateSet& C, const StateSet& Cp,
                                                           std::size_t cap) {
    Mdp m = to_mdp(a);
    const int n = m.size();
    std::vector<char> interior(n, 0);
    for (int u = 0; u < n; ++u) interior[u] = C.test(u) && !Cp.test(u) && !m.act[u].empty();
    return stationary_sets(m, interior, to_mask(Cp), cap);
}

std::set<Rat> unbounded_stationary_value_set(const ProbAutomaton& a, StateId s, const StateSet& C,
                                             const StateSet& Cp, std::size_t cap) {
    return unbounded_stationary_value_sets(a, C, Cp, cap)[s];
}

std::optional<Rat> min_positive(const std::set<Rat>& values) {
    for (auto& v : values)
        if (v.sign() > 0) return v;
    return std::nullopt;
}

} // namespace pact
