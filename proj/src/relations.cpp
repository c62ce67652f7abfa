#include "pact/relations.hpp"

#include "pact/combined.hpp"
#include "pact/errors.hpp"
#include "pact/lp.hpp"
#include "pact/parallel.hpp"
#include "pact/reach.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pact {

namespace {

Relation partition_to_relation(const std::vector<int>& cid, Relation::Kind kind) {
    Relation r(static_cast<int>(cid.size()), kind);
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b)
            if (cid[a] == cid[b]) r.set(a, b);
    return r;
}

std::vector<int> normalize_cid(std::vector<int> cid) {
    std::map<int, int> remap;
    for (int& c : cid) {
        auto [it, fresh] = remap.emplace(c, static_cast<int>(remap.size()));
        c = it->second;
    }
    return cid;
}

// split classes by a per-state key; returns true when anything split
template <typename Key>
bool split_by(std::vector<int>& cid, const std::vector<Key>& key) {
    std::map<std::pair<int, Key>, int> groups;
    std::vector<int> next(cid.size());
    for (std::size_t s = 0; s < cid.size(); ++s) {
        auto [it, fresh] =
            groups.emplace(std::make_pair(cid[s], key[s]), static_cast<int>(groups.size()));
        next[s] = it->second;
    }
    bool changed = groups.size() != static_cast<std::size_t>(
                                        *std::max_element(cid.begin(), cid.end()) + 1);
    if (changed) cid = normalize_cid(std::move(next));
    return changed;
}

// pivot-based splitting for pairwise pass predicates (pass need not be
// symmetric; both directions are required to stay together)
bool pivot_split(std::vector<int>& cid, const std::function<bool(int, int)>& pass) {
    const int n = static_cast<int>(cid.size());
    int nc = *std::max_element(cid.begin(), cid.end()) + 1;
    std::vector<std::vector<int>> blocks(nc);
    for (int s = 0; s < n; ++s) blocks[cid[s]].push_back(s);
    bool changed = false;
    std::vector<int> next(cid.size());
    int id = 0;
    for (auto& blk : blocks) {
        std::vector<int> rest = blk;
        while (!rest.empty()) {
            int p = rest.front();
            std::vector<int> mine, other;
            for (int s : rest) {
                if (s == p || (pass(s, p) && pass(p, s))) mine.push_back(s);
                else other.push_back(s);
            }
            for (int s : mine) next[s] = id;
            ++id;
            if (!other.empty()) changed = true;
            rest = std::move(other);
        }
    }
    if (changed) cid = normalize_cid(std::move(next));
    return changed;
}

StateSet reach_within(const ProbAutomaton& a, const StateSet& seeds, int steps) {
    StateSet cur = seeds;
    for (int k = 0; k < steps; ++k) {
        StateSet nxt = cur;
        for (int s : cur.members())
            for (auto& mu : a.trans(s))
                for (auto& [v, p] : mu.entries()) nxt.set(v);
        if (nxt == cur) break;
        cur = nxt;
    }
    return cur;
}

StateSet nonsingleton_states(const std::vector<int>& cid) {
    const int n = static_cast<int>(cid.size());
    std::vector<int> count(n, 0);
    for (int c : cid) ++count[c];
    StateSet out(n);
    for (int s = 0; s < n; ++s)
        if (count[cid[s]] > 1) out.set(s);
    return out;
}

// one-step optimal masses into C
std::pair<std::vector<Rat>, std::vector<Rat>> one_step_extrema(const ProbAutomaton& a,
                                                               const StateSet& C) {
    std::vector<Rat> mx(a.size()), mn(a.size());
    for (int s = 0; s < a.size(); ++s) {
        bool first = true;
        for (auto& mu : a.trans(s)) {
            Rat q = mu.mass(C);
            if (first) {
                mx[s] = mn[s] = q;
                first = false;
            } else {
                if (q > mx[s]) mx[s] = q;
                if (q < mn[s]) mn[s] = q;
            }
        }
    }
    return {mx, mn};
}

// guarded at-most clause on plain one-step masses: every transition of s
// with positive mass into C must be undercut by some transition of r
bool one_step_at_most(const ProbAutomaton& a, int s, int r, const StateSet& C) {
    for (auto& mu : a.trans(s)) {
        Rat v = mu.mass(C);
        if (v.sign() <= 0) continue;
        bool ok = false;
        for (auto& nu : a.trans(r))
            if (nu.mass(C) <= v) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

} // namespace

// ---------- strong probabilistic bisimulation (combined transitions) ----------

Relation strong_prob_bisim(const ProbAutomaton& a) {
    std::vector<int> cid = normalize_cid(a.label_class_of());
    for (;;) {
        int nc = *std::max_element(cid.begin(), cid.end()) + 1;
        auto pass = [&](int s, int r) {
            for (auto& mu : a.trans(s)) {
                auto target = mu.project(cid, nc);
                if (!can_combine_match_projection(a.trans(r), target, cid, nc)) return false;
            }
            return true;
        };
        if (!pivot_split(cid, pass)) break;
    }
    return partition_to_relation(cid, Relation::Kind::equivalence);
}

// ---------- branching probabilistic bisimulation (Segala) ----------

Relation branching_prob_bisim(const ProbAutomaton& a, int depth, const RelCaps& caps) {
    if (depth < 0) depth = a.size();
    std::vector<int> cid = normalize_cid(a.label_class_of());
    for (;;) {
        int nc = *std::max_element(cid.begin(), cid.end()) + 1;
        Relation classes = partition_to_relation(cid, Relation::Kind::equivalence);
        std::vector<std::vector<Distribution>> verts(a.size());
        for (int s = 0; s < a.size(); ++s)
            verts[s] = branching_transition_vertices(a, s, classes, depth,
                                                     caps.branching_vertex_cap);
        auto pass = [&](int s, int r) {
            for (auto& mu : a.trans(s)) {
                auto target = mu.project(cid, nc);
                if (!can_combine_match_projection(verts[r], target, cid, nc)) return false;
            }
            return true;
        };
        if (!pivot_split(cid, pass)) break;
    }
    return partition_to_relation(cid, Relation::Kind::equivalence);
}

// ---------- strong 1-depth bisimulation ----------

Relation strong_1_depth(const ProbAutomaton& a, Direction dir, DownsetMode dm,
                        const RelCaps& caps) {
    std::vector<int> cid = normalize_cid(a.label_class_of());
    for (;;) {
        Relation rel = partition_to_relation(cid, Relation::Kind::equivalence);
        auto family =
            dm == DownsetMode::full ? downsets(rel, caps.downset_cap) : principal_downsets(rel);
        bool changed = false;
        if (dir == Direction::at_most) {
            auto pass = [&](int s, int r) {
                for (auto& C : family)
                    if (!one_step_at_most(a, s, r, C) || !one_step_at_most(a, r, s, C))
                        return false;
                return true;
            };
            changed = pivot_split(cid, pass);
        } else {
            for (auto& C : family) {
                auto [mx, mn] = one_step_extrema(a, C);
                if (split_by(cid, mx)) changed = true;
                if (dir == Direction::both && split_by(cid, mn)) changed = true;
            }
        }
        if (!changed) break;
    }
    return partition_to_relation(cid, Relation::Kind::equivalence);
}

// ---------- strong i-depth branching bisimulation ----------

namespace {

// distribution over class traces of a fixed length
using Trace = std::vector<int>;
using TraceDist = std::map<Trace, Rat>;

struct TraceEnum {
    const ProbAutomaton& a;
    std::vector<int> cid;
    std::map<std::pair<int, int>, std::vector<TraceDist>> memo; // (state, len)

    const std::vector<TraceDist>& dists(int s, int len) {
        auto key = std::make_pair(s, len);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<TraceDist> out;
        if (len == 1) {
            out.push_back({{Trace{cid[s]}, Rat(1)}});
        } else if (a.trans(s).empty()) {
            // run stops here: only the one-state trace carries mass; pad with
            // a sink class (-1) so traces keep uniform length
            TraceDist d;
            Trace t(len, -1);
            t[0] = cid[s];
            d[t] = Rat(1);
            out.push_back(std::move(d));
        } else {
            std::set<TraceDist> dedup;
            for (auto& mu : a.trans(s)) {
                std::vector<StateId> succs;
                for (auto& [v, p] : mu.entries()) succs.push_back(v);
                std::vector<const std::vector<TraceDist>*> subs;
                for (StateId v : succs) subs.push_back(&dists(v, len - 1));
                std::vector<std::size_t> pick(succs.size(), 0);
                for (;;) {
                    TraceDist d;
                    for (std::size_t k = 0; k < succs.size(); ++k) {
                        Rat p = mu.at(succs[k]);
                        for (auto& [t, q] : (*subs[k])[pick[k]]) {
                            Trace full;
                            full.reserve(t.size() + 1);
                            full.push_back(cid[s]);
                            full.insert(full.end(), t.begin(), t.end());
                            d[full] += p * q;
                        }
                    }
                    dedup.insert(std::move(d));
                    std::size_t k = 0;
                    while (k < pick.size() && ++pick[k] == subs[k]->size()) pick[k++] = 0;
                    if (k == pick.size()) break;
                }
            }
            out.assign(dedup.begin(), dedup.end());
        }
        return memo.emplace(key, std::move(out)).first->second;
    }
};

} // namespace


namespace {

// per-round table cache for bounded until values over (C, Cp) pairs
struct BranchTables {
    const ProbAutomaton& a;
    int horizon;
    std::map<std::tuple<StateSet, StateSet, int>, std::vector<std::vector<Rat>>> memo;

    const std::vector<std::vector<Rat>>& get(const StateSet& C, const StateSet& Cp, OptMode m) {
        auto key = std::make_tuple(C, Cp, m == OptMode::sup ? 0 : 1);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, bounded_reach_values(a, C, Cp, horizon, m)).first;
        return it->second;
    }
};

} // namespace

Relation strong_branching_i(const ProbAutomaton& a, int i, Direction dir, const RelCaps& caps) {
    if (i <= 1) return strong_1_depth(a, dir, DownsetMode::full, caps);
    // the one-step clauses are the i=1 base of the chain
    std::vector<int> cid;
    {
        Relation base = strong_1_depth(a, dir, DownsetMode::full, caps);
        cid = normalize_cid(base.class_of());
    }
    for (;;) {
        StateSet seeds = nonsingleton_states(cid);
        if (seeds.empty()) break;
        Relation rel = partition_to_relation(cid, Relation::Kind::equivalence);
        auto family = downsets(rel, caps.downset_cap);
        bool changed = false;
        // one-step masses first (the depth-1 clauses stay part of the chain)
        if (dir == Direction::at_most) {
            auto pass1 = [&](int s, int r) {
                for (auto& C : family)
                    if (!one_step_at_most(a, s, r, C) || !one_step_at_most(a, r, s, C))
                        return false;
                return true;
            };
            bool split1 = pivot_split(cid, pass1);
            changed = changed || split1;
        } else {
            for (auto& C : family) {
                if (nonsingleton_states(cid).empty()) break;
                auto [mx, mn] = one_step_extrema(a, C);
                if (split_by(cid, mx)) changed = true;
                if (dir == Direction::both && split_by(cid, mn)) changed = true;
            }
        }
        // the until clauses compare event values of the horizon-i class-trace
        // distributions; the family of (C, C', j) events collapses to the
        // distinct trace subsets they induce
        if (nonsingleton_states(cid).empty()) {
            if (!changed) break;
            continue;
        }
        const int nc_now = *std::max_element(cid.begin(), cid.end()) + 1;
        if (nc_now > 62)
            throw resource_cap_error("branching-classes", "more than 62 classes");
        // class bitmask per downward-closed set
        std::vector<std::uint64_t> class_masks;
        {
            std::set<std::uint64_t> uniq;
            std::vector<int> rep(nc_now, -1);
            for (int u = 0; u < a.size(); ++u)
                if (rep[cid[u]] < 0) rep[cid[u]] = u;
            for (auto& C : family) {
                std::uint64_t m = 0;
                for (int c = 0; c < nc_now; ++c)
                    if (C.test(rep[c])) m |= std::uint64_t{1} << c;
                uniq.insert(m);
            }
            class_masks.assign(uniq.begin(), uniq.end());
        }
        TraceEnum te{a, cid, {}};
        const int len = i + 1;
        auto pass = [&](int s, int r) {
            auto& Vs = te.dists(s, len);
            auto& Vr = te.dists(r, len);
            // union support of both sides
            std::map<Trace, int> tix;
            for (auto* V : {&Vs, &Vr})
                for (auto& d : *V)
                    for (auto& [t, p] : d)
                        tix.emplace(t, static_cast<int>(tix.size()));
            const std::size_t nt = tix.size();
            if (nt > 64) throw resource_cap_error("branching-traces", "more than 64 traces");
            std::vector<Trace> supp(nt);
            for (auto& [t, ix] : tix) supp[ix] = t;
            auto weights = [&](const std::vector<TraceDist>& V) {
                std::vector<std::vector<Rat>> w(V.size(), std::vector<Rat>(nt));
                for (std::size_t d = 0; d < V.size(); ++d)
                    for (auto& [t, p] : V[d]) w[d][tix.at(t)] = p;
                return w;
            };
            auto ws = weights(Vs), wr = weights(Vr);
            // only classes that occur in the traces can influence an event:
            // gate sets through the prefix positions, targets anywhere
            std::uint64_t prefix_rel = 0, any_rel = 0;
            for (auto& t : supp)
                for (std::size_t pos = 0; pos < t.size(); ++pos) {
                    if (t[pos] < 0) break;
                    any_rel |= std::uint64_t{1} << t[pos];
                    if (pos + 1 < t.size()) prefix_rel |= std::uint64_t{1} << t[pos];
                }
            std::set<std::uint64_t> lhs, rhs;
            for (auto m : class_masks) {
                lhs.insert(m & prefix_rel);
                rhs.insert(m & any_rel);
            }
            // distinct until events as trace subsets
            std::set<std::uint64_t> seen;
            for (auto cm : lhs)
                for (auto tm : rhs)
                    for (int j = 1; j <= i; ++j) {
                        std::uint64_t ev = 0;
                        for (std::size_t k = 0; k < nt; ++k) {
                            const Trace& t = supp[k];
                            bool match = false;
                            for (int pos = 0; pos <= j && !match; ++pos) {
                                if (t[pos] < 0) break;
                                if ((tm >> t[pos]) & 1u) match = true;
                                else if (!((cm >> t[pos]) & 1u)) break;
                            }
                            if (match) ev |= std::uint64_t{1} << k;
                        }
                        if (!seen.insert(ev).second) continue;
                        auto value = [&](const std::vector<Rat>& w) {
                            Rat v;
                            for (std::size_t k = 0; k < nt; ++k)
                                if ((ev >> k) & 1u) v += w[k];
                            return v;
                        };
                        std::optional<Rat> sup_s, inf_s, sup_r, inf_r, minpos_s, minpos_r;
                        for (auto& w : ws) {
                            Rat v = value(w);
                            if (!sup_s || v > *sup_s) sup_s = v;
                            if (!inf_s || v < *inf_s) inf_s = v;
                            if (v.sign() > 0 && (!minpos_s || v < *minpos_s)) minpos_s = v;
                        }
                        for (auto& w : wr) {
                            Rat v = value(w);
                            if (!sup_r || v > *sup_r) sup_r = v;
                            if (!inf_r || v < *inf_r) inf_r = v;
                            if (v.sign() > 0 && (!minpos_r || v < *minpos_r)) minpos_r = v;
                        }
                        switch (dir) {
                        case Direction::at_least:
                            if (*sup_s != *sup_r) return false;
                            break;
                        case Direction::at_most:
                            if (minpos_s && *inf_r > *minpos_s) return false;
                            if (minpos_r && *inf_s > *minpos_r) return false;
                            break;
                        case Direction::both:
                            if (*sup_s != *sup_r || *inf_s != *inf_r) return false;
                            break;
                        }
                    }
            return true;
        };
        bool split = pivot_split(cid, pass);
        changed = changed || split;
        if (!changed) break;
    }
    return partition_to_relation(cid, Relation::Kind::equivalence);
}

// ---------- strong i-depth bisimulation (trace events) ----------

namespace {

struct DominationOutcome {
    bool dominated;
    std::vector<Trace> witness; // violating event when not dominated
};

// does every event value of d stay below the best of V? equivalently:
// no T subseteq supp(d) with d(T) > max_{e in V} e(T).
DominationOutcome dominated_by(const TraceDist& d, const std::vector<TraceDist>& V) {
    std::vector<Trace> supp;
    for (auto& [t, p] : d) supp.push_back(t);
    const std::size_t n = supp.size();
    const std::size_t m = V.size();
    // margins[e][k] = d(t_k) - e(t_k)
    std::vector<std::vector<Rat>> margin(m, std::vector<Rat>(n));
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t k = 0; k < n; ++k) {
            auto it = V[e].find(supp[k]);
            margin[e][k] = d.at(supp[k]) - (it == V[e].end() ? Rat(0) : it->second);
        }
    // LP first: a mixture of V dominating d pointwise proves every event safe
    {
        LinFeas lp(static_cast<int>(m));
        std::vector<Rat> ones(m, Rat(1));
        lp.add_eq(ones, Rat(1));
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rat> row(m);
            for (std::size_t e = 0; e < m; ++e) row[e] = -margin[e][k]; // e(t) - d(t) >= ... shifted
            lp.add_ge(std::move(row), Rat(0));
        }
        if (lp.feasible()) return {true, {}};
    }
    // branch and bound over subsets: a violation needs a positive margin sum
    // against every e simultaneously
    std::vector<Rat> cur(m);
    std::vector<std::vector<Rat>> tail(m, std::vector<Rat>(n + 1));
    for (std::size_t e = 0; e < m; ++e)
        for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
            tail[e][k] = tail[e][k + 1];
            if (margin[e][k].sign() > 0) tail[e][k] = tail[e][k] + margin[e][k];
        }
    std::vector<int> chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
        if (!chosen.empty()) {
            bool all_pos = true;
            for (std::size_t e = 0; e < m; ++e)
                if (cur[e].sign() <= 0) { all_pos = false; break; }
            if (all_pos) return true;
        }
        if (k == n) return false;
        for (std::size_t e = 0; e < m; ++e)
            if ((cur[e] + tail[e][k]).sign() <= 0) return false; // cannot beat e anymore
        // include t_k
        chosen.push_back(static_cast<int>(k));
        for (std::size_t e = 0; e < m; ++e) cur[e] += margin[e][k];
        if (dfs(k + 1)) return true;
        chosen.pop_back();
        for (std::size_t e = 0; e < m; ++e) cur[e] -= margin[e][k];
        // exclude t_k
        return dfs(k + 1);
    };
    if (dfs(0)) {
        std::vector<Trace> ev;
        for (int k : chosen) ev.push_back(supp[k]);
        return {false, ev};
    }
    return {true, {}};
}

PatternSet traces_to_patterns(const std::vector<Trace>& traces, const std::vector<int>& cid,
                              int n) {
    std::vector<StateSet> class_sets;
    int nc = *std::max_element(cid.begin(), cid.end()) + 1;
    class_sets.assign(nc, StateSet(n));
    for (int s = 0; s < n; ++s) class_sets[cid[s]].set(s);
    std::vector<std::vector<StateSet>> pats;
    for (auto& t : traces) {
        std::vector<StateSet> pat;
        for (int c : t) pat.push_back(c < 0 ? StateSet(n) : class_sets[c]);
        pats.push_back(std::move(pat));
    }
    return PatternSet(std::move(pats));
}

} // namespace

Relation strong_i_depth(const ProbAutomaton& a, int i, const RelCaps& caps) {
    if (i <= 1) return strong_1_depth(a, Direction::both, DownsetMode::full, caps);
    Relation base = strong_1_depth(a, Direction::both, DownsetMode::full, caps);
    std::vector<int> cid = normalize_cid(base.class_of());
    const int len = i + 1;
    for (;;) {
        TraceEnum te{a, cid, {}};
        auto pass = [&](int s, int r) {
            auto& Vs = te.dists(s, len);
            auto& Vr = te.dists(r, len);
            for (auto& d : Vs)
                if (!dominated_by(d, Vr).dominated) return false;
            for (auto& e : Vr)
                if (!dominated_by(e, Vs).dominated) return false;
            return true;
        };
        if (!pivot_split(cid, pass)) break;
    }
    return partition_to_relation(cid, Relation::Kind::equivalence);
}

// ---------- weak branching bisimulation ----------

Relation weak_branching_bisim(const ProbAutomaton& a, Direction dir, const RelCaps& caps) {
    std::vector<int> cid = normalize_cid(a.label_class_of());
    for (;;) {
        StateSet seeds = nonsingleton_states(cid);
        if (seeds.empty()) break;
        Relation rel = partition_to_relation(cid, Relation::Kind::equivalence);
        auto family = downsets(rel, caps.downset_cap);
        StateSet mask = reach_within(a, seeds, a.size());
        std::set<StateSet> masked;
        for (auto& C : family) masked.insert(C & mask);
        bool changed = false;
        if (dir == Direction::at_most) {
            auto pass = [&](int s, int r) {
                for (auto& C : masked)
                    for (auto& Cp : masked) {
                        auto vs = unbounded_stationary_value_set(a, s, C, Cp, caps.value_set_cap);
                        auto vr = unbounded_stationary_value_set(a, r, C, Cp, caps.value_set_cap);
                        auto ms = min_positive(vs);
                        auto mr = min_positive(vr);
                        if (ms && *vr.begin() > *ms) return false;
                        if (mr && *vs.begin() > *mr) return false;
                    }
                return true;
            };
            changed = pivot_split(cid, pass);
        } else {
            for (auto& C : masked) {
                if (nonsingleton_states(cid).empty()) break;
                for (auto& Cp : masked) {
                    auto sup = unbounded_reach_values(a, C, Cp, OptMode::sup);
                    if (split_by(cid, sup)) changed = true;
                    if (dir == Direction::both) {
                        auto inf = unbounded_reach_values(a, C, Cp, OptMode::inf);
                        if (split_by(cid, inf)) changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
    return partition_to_relation(cid, Relation::Kind::equivalence);
}

// ---------- weak bisimulation (stuttering events) ----------

namespace {

// adjacent-distinct class sequences, first enumerated singly, then in
// prefix-free antichains of bounded size; deterministic order
struct StutterEnum {
    int num_classes;
    int max_len;
    std::vector<std::vector<int>> seqs; // class-id sequences

    StutterEnum(int nc, int len) : num_classes(nc), max_len(len) {
        std::vector<int> cur;
        for (int l = 1; l <= max_len; ++l) gen(cur, l);
        std::stable_sort(seqs.begin(), seqs.end(),
                         [](const std::vector<int>& x, const std::vector<int>& y) {
                             if (x.size() != y.size()) return x.size() < y.size();
                             return x < y;
                         });
    }
    void gen(std::vector<int>& cur, int target) {
        if (static_cast<int>(cur.size()) == target) {
            seqs.push_back(cur);
            return;
        }
        for (int c = 0; c < num_classes; ++c) {
            if (!cur.empty() && cur.back() == c) continue;
            cur.push_back(c);
            gen(cur, target);
            cur.pop_back();
        }
    }
};

bool is_seq_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() >= b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

PatternSet seqs_to_patterns(const std::vector<const std::vector<int>*>& seqs,
                            const std::vector<int>& cid, int n) {
    int nc = *std::max_element(cid.begin(), cid.end()) + 1;
    std::vector<StateSet> class_sets(nc, StateSet(n));
    for (int s = 0; s < n; ++s) class_sets[cid[s]].set(s);
    std::vector<std::vector<StateSet>> pats;
    for (auto* sq : seqs) {
        std::vector<StateSet> pat;
        for (int c : *sq) pat.push_back(class_sets[c]);
        pats.push_back(std::move(pat));
    }
    return PatternSet(std::move(pats));
}

} // namespace

Relation weak_bisim(const ProbAutomaton& a, const RelCaps& caps,
                    std::vector<std::string>* notes) {
    std::vector<int> cid = normalize_cid(a.label_class_of());
    bool capped = false;
    for (;;) {
        if (nonsingleton_states(cid).empty()) break;
        int nc = *std::max_element(cid.begin(), cid.end()) + 1;
        int len = caps.weak_pattern_len > 0 ? caps.weak_pattern_len : nc + 1;
        StutterEnum en(nc, len);
        std::size_t budget = caps.weak_eval_budget;
        bool changed = false;
        auto eval_and_split = [&](const std::vector<const std::vector<int>*>& seqs) {
            PatternSet ps = seqs_to_patterns(seqs, cid, a.size());
            auto sup = stuttering_pattern_opt_values(a, ps, OptMode::sup, caps.stutter_node_cap);
            if (split_by(cid, sup)) changed = true;
            auto inf = stuttering_pattern_opt_values(a, ps, OptMode::inf, caps.stutter_node_cap);
            if (split_by(cid, inf)) changed = true;
        };
        for (std::size_t i = 0; i < en.seqs.size() && budget > 0 && !changed; ++i) {
            --budget;
            eval_and_split({&en.seqs[i]});
        }
        if (caps.weak_antichain_size >= 2) {
            for (std::size_t i = 0; i < en.seqs.size() && budget > 0 && !changed; ++i)
                for (std::size_t j = i + 1; j < en.seqs.size() && budget > 0 && !changed; ++j) {
                    if (is_seq_prefix(en.seqs[i], en.seqs[j]) ||
                        is_seq_prefix(en.seqs[j], en.seqs[i]))
                        continue;
                    --budget;
                    eval_and_split({&en.seqs[i], &en.seqs[j]});
                }
        }
        if (budget == 0) capped = true;
        if (!changed) break;
    }
    if (capped && notes)
        notes->push_back("weak-bisim: pattern enumeration budget exhausted; relation is exact "
                         "only up to the enumerated stuttering events");
    return partition_to_relation(cid, Relation::Kind::equivalence);
}

// ---------- simulations ----------

Relation strong_prob_sim(const ProbAutomaton& a) {
    Relation rel = Relation::label_equality(a.label_class_of(), Relation::Kind::preorder);
    for (;;) {
        Relation next = rel;
        bool changed = false;
        for (int s = 0; s < a.size(); ++s)
            for (int r = 0; r < a.size(); ++r) {
                if (!rel.related(s, r)) continue;
                bool ok = true;
                for (auto& mu : a.trans(s))
                    if (!weight_function_combined_feasible(mu, a.trans(r), rel)) {
                        ok = false;
                        break;
                    }
                if (!ok) {
                    next.clear(s, r);
                    changed = true;
                }
            }
        rel = next;
        if (!changed) break;
    }
    return rel;
}

namespace {

// generic preorder gfp: per sweep, a setup callback precomputes whatever the
// clause needs against the current relation, then failing pairs are deleted
Relation preorder_gfp_from(const ProbAutomaton& a, Relation rel,
                           const std::function<std::function<bool(int, int)>(const Relation&)>& setup) {
    for (;;) {
        auto clause = setup(rel);
        Relation next = rel;
        bool changed = false;
        for (int s = 0; s < a.size(); ++s)
            for (int r = 0; r < a.size(); ++r) {
                if (!rel.related(s, r) || s == r) continue;
                if (!clause(s, r)) {
                    next.clear(s, r);
                    changed = true;
                }
            }
        rel = next;
        if (!changed) break;
    }
    return rel;
}

Relation preorder_gfp(const ProbAutomaton& a,
                      const std::function<std::function<bool(int, int)>(const Relation&)>& setup) {
    return preorder_gfp_from(
        a, Relation::label_equality(a.label_class_of(), Relation::Kind::preorder), setup);
}

} // namespace

Relation branching_sim_i(const ProbAutomaton& a, int i, const RelCaps& caps) {
    // clause 1 of the branching chain, read on the infimum side: whatever
    // lower bound r guarantees for an event, s must guarantee too
    Relation rel = Relation::label_equality(a.label_class_of(), Relation::Kind::preorder);
    for (int lvl = 1; lvl <= i; ++lvl) {
        rel = preorder_gfp_from(a, rel, [&](const Relation& cur) -> std::function<bool(int, int)> {
            auto family = downsets(cur, caps.downset_cap);
            auto infs = std::make_shared<std::vector<std::vector<Rat>>>();
            for (auto& C : family)
                for (auto& Cp : family)
                    infs->push_back(bounded_reach_values(a, C, Cp, lvl, OptMode::inf)[lvl]);
            return [infs](int s, int r) {
                for (auto& v : *infs)
                    if (v[r] > v[s]) return false;
                return true;
            };
        });
    }
    return rel;
}

Relation sim_i_depth(const ProbAutomaton& a, int i, const RelCaps& caps,
                     std::vector<std::string>* notes) {
    bool capped = false;
    Relation rel = preorder_gfp(a, [&](const Relation& cur) -> std::function<bool(int, int)> {
        auto cid_v = cur.class_of();
        int nc = *std::max_element(cid_v.begin(), cid_v.end()) + 1;
        std::vector<int> rep(nc, -1);
        for (int s = 0; s < a.size(); ++s)
            if (rep[cid_v[s]] < 0) rep[cid_v[s]] = s;
        auto family = downsets(cur, caps.downset_cap);
        std::vector<StateSet> sets;
        for (auto& C : family)
            if (!C.empty()) sets.push_back(C);
        // down-set sequences up to length i+1 under a budget, shortest first
        std::vector<std::vector<int>> pats;
        {
            std::size_t budget = caps.sim_pattern_budget;
            std::vector<std::vector<int>> frontier{{}};
            for (int l = 0; l < i + 1 && budget > 0; ++l) {
                std::vector<std::vector<int>> next;
                for (auto& p : frontier)
                    for (std::size_t k = 0; k < sets.size() && budget > 0; ++k) {
                        auto q = p;
                        q.push_back(static_cast<int>(k));
                        --budget;
                        pats.push_back(q);
                        next.push_back(std::move(q));
                    }
                frontier = std::move(next);
            }
            if (budget == 0) capped = true;
        }
        auto te = std::make_shared<TraceEnum>(TraceEnum{a, cid_v, {}});
        auto sets_copy = sets;
        auto pats_copy = pats;
        auto rep_copy = rep;
        const int len = i + 1;
        return [=, &a](int s, int r) mutable {
            auto& Vs = te->dists(s, len);
            auto& Vr = te->dists(r, len);
            for (auto& pat : pats_copy) {
                auto matches = [&](const Trace& t) {
                    if (t.size() < pat.size()) return false;
                    for (std::size_t k = 0; k < pat.size(); ++k) {
                        if (t[k] < 0) return false;
                        if (!sets_copy[pat[k]].test(rep_copy[t[k]])) return false;
                    }
                    return true;
                };
                auto inf_of = [&](const std::vector<TraceDist>& V) {
                    std::optional<Rat> best;
                    for (auto& d : V) {
                        Rat v;
                        for (auto& [t, p] : d)
                            if (matches(t)) v += p;
                        if (!best || v < *best) best = v;
                    }
                    return *best;
                };
                if (inf_of(Vr) > inf_of(Vs)) return false;
            }
            return true;
        };
    });
    if (capped && notes)
        notes->push_back("sim-i: pattern budget exhausted; preorder is exact only up to the "
                         "enumerated patterns");
    return rel;
}

Relation weak_branching_sim(const ProbAutomaton& a, const RelCaps& caps) {
    return preorder_gfp(a, [&](const Relation& cur) -> std::function<bool(int, int)> {
        auto family = downsets(cur, caps.downset_cap);
        auto infs = std::make_shared<std::vector<std::vector<Rat>>>();
        for (auto& C : family)
            for (auto& Cp : family)
                infs->push_back(unbounded_reach_values(a, C, Cp, OptMode::inf));
        return [infs](int s, int r) {
            for (auto& v : *infs)
                if (v[r] > v[s]) return false;
            return true;
        };
    });
}

Relation weak_sim(const ProbAutomaton& a, const RelCaps& caps, std::vector<std::string>* notes) {
    bool capped = false;
    Relation rel = preorder_gfp(a, [&](const Relation& cur) -> std::function<bool(int, int)> {
        auto cid_v = cur.class_of();
        int nc = *std::max_element(cid_v.begin(), cid_v.end()) + 1;
        int len = caps.weak_pattern_len > 0 ? caps.weak_pattern_len : std::min(nc + 1, 3);
        StutterEnum en(nc, len);
        auto infs = std::make_shared<std::vector<std::vector<Rat>>>();
        std::size_t budget = caps.weak_eval_budget;
        auto add_event = [&](const std::vector<const std::vector<int>*>& seqs) {
            PatternSet ps = seqs_to_patterns(seqs, cid_v, a.size());
            infs->push_back(
                stuttering_pattern_opt_values(a, ps, OptMode::inf, caps.stutter_node_cap));
        };
        for (std::size_t k = 0; k < en.seqs.size() && budget > 0; ++k) {
            --budget;
            add_event({&en.seqs[k]});
        }
        if (caps.weak_antichain_size >= 2)
            for (std::size_t x = 0; x < en.seqs.size() && budget > 0; ++x)
                for (std::size_t y = x + 1; y < en.seqs.size() && budget > 0; ++y) {
                    if (is_seq_prefix(en.seqs[x], en.seqs[y]) ||
                        is_seq_prefix(en.seqs[y], en.seqs[x]))
                        continue;
                    --budget;
                    add_event({&en.seqs[x], &en.seqs[y]});
                }
        if (budget == 0) capped = true;
        return [infs](int s, int r) {
            for (auto& v : *infs)
                if (v[r] > v[s]) return false;
            return true;
        };
    });
    if (capped && notes)
        notes->push_back("weak-sim: stuttering event budget exhausted; preorder is exact only "
                         "up to the enumerated events");
    return rel;
}

// ---------- witnesses and the query driver ----------

namespace {

std::string set_text(const ProbAutomaton& a, const StateSet& s) {
    std::string out = "{";
    bool first = true;
    for (int u : s.members()) {
        if (!first) out += ",";
        out += a.display(u);
        first = false;
    }
    return out + "}";
}

// look for a separating event of the given relation kind for the pair,
// evaluated against one stage relation
std::optional<Witness> probe_witness(const ProbAutomaton& a, const std::string& name, int depth,
                                     const Relation& rel, int s, int r, const RelCaps& caps) {
    auto family = downsets(rel, caps.downset_cap);
    auto cid = rel.class_of();
    if (name == "strong-prob-bisim" || name == "branching-prob-bisim" ||
        name == "strong-prob-sim") {
        int nc = *std::max_element(cid.begin(), cid.end()) + 1;
        auto unmatched = [&](int from, int to) -> std::optional<Witness> {
            for (auto& mu : a.trans(from)) {
                bool ok = name == "strong-prob-sim"
                              ? weight_function_combined_feasible(mu, a.trans(to), rel)
                              : can_combine_match_projection(a.trans(to),
                                                             mu.project(cid, nc), cid, nc);
                if (!ok) {
                    Witness w;
                    w.kind = Witness::Kind::no_combined_match;
                    StateSet supp(a.size());
                    for (auto& [v, p] : mu.entries()) supp.set(v);
                    w.C = supp;
                    return w;
                }
            }
            return std::nullopt;
        };
        if (auto w = unmatched(s, r)) return w;
        if (name != "strong-prob-sim")
            if (auto w = unmatched(r, s)) return w;
        return std::nullopt;
    }
    const bool sim_kind = name == "branching-sim-i" || name == "sim-i" ||
                          name == "weak-branching-sim" || name == "weak-sim";
    if (name == "branching-sim-i" || name == "weak-branching-sim") {
        // directional: an infimum r guarantees that s cannot
        const int horizon = name == "branching-sim-i" ? std::max(depth, 1) : -1;
        for (auto& C : family)
            for (auto& Cp : family) {
                std::vector<Rat> v;
                if (horizon > 0) {
                    for (int j = 1; j <= horizon; ++j) {
                        v = bounded_reach_values(a, C, Cp, j, OptMode::inf)[j];
                        if (v[r] > v[s]) break;
                    }
                } else {
                    v = unbounded_reach_values(a, C, Cp, OptMode::inf);
                }
                if (!v.empty() && v[r] > v[s]) {
                    Witness w;
                    w.kind = Witness::Kind::reach_event;
                    w.C = C;
                    w.Cp = Cp;
                    w.steps = horizon;
                    w.left_value = v[s];
                    w.right_value = v[r];
                    return w;
                }
            }
        return std::nullopt;
    }
    if (name == "weak-sim") {
        auto cid_v = rel.class_of();
        int nc = *std::max_element(cid_v.begin(), cid_v.end()) + 1;
        int len = caps.weak_pattern_len > 0 ? caps.weak_pattern_len : std::min(nc + 1, 3);
        StutterEnum en(nc, len);
        std::size_t budget = caps.weak_eval_budget;
        auto probe = [&](const std::vector<const std::vector<int>*>& seqs)
            -> std::optional<Witness> {
            PatternSet ps = seqs_to_patterns(seqs, cid_v, a.size());
            auto v = stuttering_pattern_opt_values(a, ps, OptMode::inf, caps.stutter_node_cap);
            if (v[r] > v[s]) {
                Witness w;
                w.kind = Witness::Kind::stutter_event;
                w.patterns = ps;
                w.left_value = v[s];
                w.right_value = v[r];
                return w;
            }
            return std::nullopt;
        };
        for (std::size_t k = 0; k < en.seqs.size() && budget > 0; ++k) {
            --budget;
            if (auto w = probe({&en.seqs[k]})) return w;
        }
        for (std::size_t x = 0; x < en.seqs.size() && budget > 0; ++x)
            for (std::size_t y = x + 1; y < en.seqs.size() && budget > 0; ++y) {
                if (is_seq_prefix(en.seqs[x], en.seqs[y]) || is_seq_prefix(en.seqs[y], en.seqs[x]))
                    continue;
                --budget;
                if (auto w = probe({&en.seqs[x], &en.seqs[y]})) return w;
            }
        return std::nullopt;
    }
    (void)sim_kind;
    if (name == "strong-1" || name == "strong-branching-i") {
        for (auto& C : family) {
            auto [mx, mn] = one_step_extrema(a, C);
            if (mx[s] != mx[r] || mn[s] != mn[r]) {
                Witness w;
                w.kind = Witness::Kind::one_step;
                w.C = C;
                w.left_value = mx[s] != mx[r] ? mx[s] : mn[s];
                w.right_value = mx[s] != mx[r] ? mx[r] : mn[r];
                return w;
            }
        }
        const int horizon = std::max(depth, 1);
        const int nc = *std::max_element(cid.begin(), cid.end()) + 1;
        if (nc > 62) return std::nullopt;
        std::vector<int> rep(nc, -1);
        for (int u = 0; u < a.size(); ++u)
            if (rep[cid[u]] < 0) rep[cid[u]] = u;
        std::set<std::uint64_t> class_masks;
        for (auto& C : family) {
            std::uint64_t m = 0;
            for (int c = 0; c < nc; ++c)
                if (C.test(rep[c])) m |= std::uint64_t{1} << c;
            class_masks.insert(m);
        }
        StateSet mask_c = reach_within(a, StateSet::of(a.size(), {s, r}), horizon - 1);
        StateSet mask_cp = reach_within(a, StateSet::of(a.size(), {s, r}), horizon);
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        std::uint64_t prefix_rel = 0, any_rel = 0;
        for (int c = 0; c < nc; ++c) {
            StateSet cs(a.size());
            for (int u = 0; u < a.size(); ++u)
                if (cid[u] == c) cs.set(u);
            if (cs.intersects(mask_c)) prefix_rel |= std::uint64_t{1} << c;
            if (cs.intersects(mask_cp)) any_rel |= std::uint64_t{1} << c;
        }
        for (auto cm : class_masks)
            for (auto tm : class_masks) {
                if (!seen.emplace(cm & prefix_rel, tm & any_rel).second) continue;
                StateSet C(a.size()), Cp(a.size());
                for (int u = 0; u < a.size(); ++u) {
                    if ((cm >> cid[u]) & 1u) C.set(u);
                    if ((tm >> cid[u]) & 1u) Cp.set(u);
                }
                for (int j = 1; j <= horizon; ++j)
                    for (auto mode : {OptMode::sup, OptMode::inf}) {
                        auto v = bounded_reach_values(a, C, Cp, j, mode)[j];
                        if (v[s] != v[r]) {
                            Witness w;
                            w.kind = Witness::Kind::reach_event;
                            w.C = C;
                            w.Cp = Cp;
                            w.steps = j;
                            w.left_value = v[s];
                            w.right_value = v[r];
                            return w;
                        }
                    }
            }
        return std::nullopt;
    }
    if (name == "weak-branching-bisim" || name == "weak-branching-sim") {
        for (auto& C : family)
            for (auto& Cp : family)
                for (auto mode : {OptMode::sup, OptMode::inf}) {
                    auto v = unbounded_reach_values(a, C, Cp, mode);
                    if (v[s] != v[r]) {
                        Witness w;
                        w.kind = Witness::Kind::reach_event;
                        w.C = C;
                        w.Cp = Cp;
                        w.steps = -1;
                        w.left_value = v[s];
                        w.right_value = v[r];
                        return w;
                    }
                }
        return std::nullopt;
    }
    if (name == "strong-i" || name == "sim-i") {
        int len = std::max(depth, 1) + 1;
        TraceEnum te{a, cid, {}};
        auto& Vs = te.dists(s, len);
        auto& Vr = te.dists(r, len);
        for (auto& d : Vs) {
            auto out = dominated_by(d, Vr);
            if (!out.dominated) {
                Witness w;
                w.kind = Witness::Kind::pattern_event;
                w.patterns = traces_to_patterns(out.witness, cid, a.size());
                w.left_value = pattern_opt(a, s, w.patterns, OptMode::sup).value;
                w.right_value = pattern_opt(a, r, w.patterns, OptMode::sup).value;
                return w;
            }
        }
        for (auto& e : Vr) {
            auto out = dominated_by(e, Vs);
            if (!out.dominated) {
                Witness w;
                w.kind = Witness::Kind::pattern_event;
                w.patterns = traces_to_patterns(out.witness, cid, a.size());
                w.left_value = pattern_opt(a, s, w.patterns, OptMode::sup).value;
                w.right_value = pattern_opt(a, r, w.patterns, OptMode::sup).value;
                return w;
            }
        }
        return std::nullopt;
    }
    if (name == "weak-bisim" || name == "weak-sim") {
        int nc = *std::max_element(cid.begin(), cid.end()) + 1;
        int len = caps.weak_pattern_len > 0 ? caps.weak_pattern_len : nc + 1;
        StutterEnum en(nc, len);
        std::size_t budget = caps.weak_eval_budget;
        auto probe = [&](const std::vector<const std::vector<int>*>& seqs)
            -> std::optional<Witness> {
            PatternSet ps = seqs_to_patterns(seqs, cid, a.size());
            for (auto mode : {OptMode::sup, OptMode::inf}) {
                auto v = stuttering_pattern_opt_values(a, ps, mode, caps.stutter_node_cap);
                if (v[s] != v[r]) {
                    Witness w;
                    w.kind = Witness::Kind::stutter_event;
                    w.patterns = ps;
                    w.left_value = v[s];
                    w.right_value = v[r];
                    return w;
                }
            }
            return std::nullopt;
        };
        for (std::size_t k = 0; k < en.seqs.size() && budget > 0; ++k) {
            --budget;
            if (auto w = probe({&en.seqs[k]})) return w;
        }
        for (std::size_t x = 0; x < en.seqs.size() && budget > 0; ++x)
            for (std::size_t y = x + 1; y < en.seqs.size() && budget > 0; ++y) {
                if (is_seq_prefix(en.seqs[x], en.seqs[y]) || is_seq_prefix(en.seqs[y], en.seqs[x]))
                    continue;
                --budget;
                if (auto w = probe({&en.seqs[x], &en.seqs[y]})) return w;
            }
        return std::nullopt;
    }
    return std::nullopt;
}

// probe against the coarsest stage first so witnesses reflect the events
// that actually caused the split, not vacuous artifacts of the final classes
std::optional<Witness> find_witness(const ProbAutomaton& a, const std::string& name, int depth,
                                    const Relation& final_rel, int s, int r,
                                    const RelCaps& caps) {
    if (!a.labels_equal(s, r)) return std::nullopt;
    Relation label_stage =
        Relation::label_equality(a.label_class_of(), Relation::Kind::equivalence);
    if (auto w = probe_witness(a, name, depth, label_stage, s, r, caps)) return w;
    return probe_witness(a, name, depth, final_rel, s, r, caps);
}

} // namespace

std::string Witness::text(const ProbAutomaton& a) const {
    std::ostringstream os;
    switch (kind) {
    case Kind::one_step:
        os << "one-step masses into C=" << set_text(a, C);
        break;
    case Kind::reach_event:
        os << "reach C'=" << set_text(a, Cp) << " via C=" << set_text(a, C);
        if (steps >= 0) os << " within " << steps << " steps";
        break;
    case Kind::pattern_event:
        os << "pattern event " << patterns.str(&a.display_names);
        break;
    case Kind::stutter_event:
        os << "stuttering event " << patterns.str(&a.display_names);
        break;
    case Kind::no_combined_match:
        os << "a transition with support " << set_text(a, C)
           << " admits no combined (branching) match on the other side";
        return os.str();
    }
    os << "; values " << left_value.str() << " vs " << right_value.str();
    return os.str();
}

std::string Verdict::text(const ProbAutomaton& a) const {
    std::ostringstream os;
    os << relation_name;
    if (depth >= 0) os << " depth=" << depth;
    os << " direction="
       << (direction == Direction::both ? "both"
                                        : direction == Direction::at_least ? "at-least"
                                                                           : "at-most")
       << (caps_hit ? " (caps hit)" : "") << ": ";
    if (pair) {
        os << a.display(pair->first) << (related ? " related to " : " NOT related to ")
           << a.display(pair->second) << "\n";
        if (witness) os << "witness: " << witness->text(a) << "\n";
    }
    auto classes = relation.classes();
    if (relation.is_symmetric()) {
        os << "classes:";
        for (auto& c : classes) os << " " << set_text(a, c);
        os << "\n";
    } else {
        os << "preorder matrix (rows below columns):\n" << relation.str();
    }
    for (auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

std::vector<std::string> relation_names() {
    return {"strong-prob-bisim", "branching-prob-bisim", "strong-1",     "strong-branching-i",
            "strong-i",          "weak-branching-bisim", "weak-bisim",   "strong-prob-sim",
            "branching-sim-i",   "sim-i",                "weak-branching-sim", "weak-sim"};
}

Verdict run_relation_query(const ProbAutomaton& a, const RelationQuery& q,
                           std::optional<std::pair<StateId, StateId>> pair) {
    Verdict v;
    v.relation_name = q.name;
    v.depth = q.depth;
    v.direction = q.direction;
    const bool needs_depth = q.name == "strong-branching-i" || q.name == "strong-i" ||
                             q.name == "branching-sim-i" || q.name == "sim-i" ||
                             q.name == "branching-prob-bisim";
    int depth = q.depth;
    if (needs_depth && depth < 0 && q.name != "branching-prob-bisim")
        throw std::invalid_argument("relation " + q.name + " requires --depth");

    if (q.name == "strong-prob-bisim") v.relation = strong_prob_bisim(a);
    else if (q.name == "branching-prob-bisim") v.relation = branching_prob_bisim(a, depth, q.caps);
    else if (q.name == "strong-1") v.relation = strong_1_depth(a, q.direction, q.downset_mode, q.caps);
    else if (q.name == "strong-branching-i") v.relation = strong_branching_i(a, depth, q.direction, q.caps);
    else if (q.name == "strong-i") v.relation = strong_i_depth(a, depth, q.caps);
    else if (q.name == "weak-branching-bisim") v.relation = weak_branching_bisim(a, q.direction, q.caps);
    else if (q.name == "weak-bisim") v.relation = weak_bisim(a, q.caps, &v.notes);
    else if (q.name == "strong-prob-sim") v.relation = strong_prob_sim(a);
    else if (q.name == "branching-sim-i") v.relation = branching_sim_i(a, depth, q.caps);
    else if (q.name == "sim-i") v.relation = sim_i_depth(a, depth, q.caps, &v.notes);
    else if (q.name == "weak-branching-sim") v.relation = weak_branching_sim(a, q.caps);
    else if (q.name == "weak-sim") v.relation = weak_sim(a, q.caps, &v.notes);
    else throw std::invalid_argument("unknown relation '" + q.name + "'");

    v.caps_hit = !v.notes.empty();
    if (pair) {
        v.pair = pair;
        v.related = v.relation.related(pair->first, pair->second);
        if (!v.related) {
            if (!a.labels_equal(pair->first, pair->second))
                v.notes.push_back("states carry different labels");
            else
                v.witness = find_witness(a, q.name, depth, v.relation, pair->first, pair->second,
                                         q.caps);
        }
    }
    return v;
}

} // namespace pact
