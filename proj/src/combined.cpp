#include "pact/combined.hpp"

#include "pact/errors.hpp"
#include "pact/lp.hpp"

#include <map>
#include <set>

namespace pact {

bool can_combine_match_projection(const std::vector<Distribution>& candidates,
                                  const std::vector<Rat>& target,
                                  const std::vector<int>& class_of, int num_classes) {
    if (candidates.empty()) return false;
    const int m = static_cast<int>(candidates.size());
    std::vector<std::vector<Rat>> proj;
    proj.reserve(m);
    for (auto& d : candidates) proj.push_back(d.project(class_of, num_classes));

    LinFeas lp(m);
    {
        std::vector<Rat> ones(m, Rat(1));
        lp.add_eq(ones, Rat(1));
    }
    for (int c = 0; c < num_classes; ++c) {
        std::vector<Rat> row(m);
        for (int i = 0; i < m; ++i) row[i] = proj[i][c];
        lp.add_eq(std::move(row), target[c]);
    }
    return lp.feasible();
}

bool can_combine_match(const ProbAutomaton& a, StateId s, const std::vector<Rat>& target,
                       const Relation& classes) {
    auto cid = classes.class_of();
    return can_combine_match_projection(a.trans(s), target, cid, classes.num_classes());
}

namespace {

void collect_branching(const ProbAutomaton& a, StateId s, const std::vector<int>& cid, int depth,
                       std::size_t max_vertices, std::set<Distribution>& out) {
    out.insert(Distribution::dirac(s));
    if (depth <= 0) return;
    for (auto& mu : a.trans(s)) {
        // successors inside [s] may keep evolving; others are frozen
        std::vector<StateId> inside;
        for (auto& [v, p] : mu.entries())
            if (cid[v] == cid[s]) inside.push_back(v);
        std::vector<std::vector<Distribution>> options;
        options.reserve(inside.size());
        for (StateId v : inside) {
            std::set<Distribution> sub;
            collect_branching(a, v, cid, depth - 1, max_vertices, sub);
            options.emplace_back(sub.begin(), sub.end());
        }
        // every choice function over the inside-successors yields a vertex
        std::vector<std::size_t> pick(inside.size(), 0);
        for (;;) {
            std::map<StateId, Rat> acc;
            for (auto& [v, p] : mu.entries()) {
                if (cid[v] != cid[s]) {
                    acc[v] += p;
                    continue;
                }
                std::size_t k = 0;
                while (inside[k] != v) ++k;
                for (auto& [w, q] : options[k][pick[k]].entries()) acc[w] += p * q;
            }
            std::vector<std::pair<StateId, Rat>> e(acc.begin(), acc.end());
            out.insert(Distribution(std::move(e)));
            if (out.size() > max_vertices)
                throw resource_cap_error("branching-vertices",
                                         "branching vertex set exceeds cap " +
                                             std::to_string(max_vertices));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
}

} // namespace

std::vector<Distribution> branching_transition_vertices(const ProbAutomaton& a, StateId s,
                                                        const Relation& classes, int depth,
                                                        std::size_t max_vertices) {
    std::set<Distribution> out;
    collect_branching(a, s, classes.class_of(), depth, max_vertices, out);
    return {out.begin(), out.end()};
}

bool weight_function_combined_feasible(const Distribution& mu,
                                       const std::vector<Distribution>& candidates,
                                       const Relation& rel) {
    if (candidates.empty()) return false;
    const int m = static_cast<int>(candidates.size());
    // variable layout: lambda_0..lambda_{m-1}, then Delta(u,v) per admissible pair
    std::vector<StateId> us;
    for (auto& [u, p] : mu.entries()) us.push_back(u);
    std::set<StateId> vset;
    for (auto& d : candidates)
        for (auto& [v, p] : d.entries()) vset.insert(v);
    std::vector<StateId> vs(vset.begin(), vset.end());

    std::vector<std::pair<int, int>> pairs; // (u index, v index)
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (rel.related(us[i], vs[j])) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    const int nvars = m + static_cast<int>(pairs.size());
    LinFeas lp(nvars);
    {
        std::vector<Rat> row(nvars);
        for (int i = 0; i < m; ++i) row[i] = Rat(1);
        lp.add_eq(std::move(row), Rat(1));
    }
    // row sums: sum_v Delta(u,v) = mu(u)
    for (std::size_t i = 0; i < us.size(); ++i) {
        std::vector<Rat> row(nvars);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k].first == static_cast<int>(i)) row[m + k] = Rat(1);
        lp.add_eq(std::move(row), mu.at(us[i]));
    }
    // column sums: sum_u Delta(u,v) - sum_i lambda_i nu_i(v) = 0
    for (std::size_t j = 0; j < vs.size(); ++j) {
        std::vector<Rat> row(nvars);
        for (int i = 0; i < m; ++i) row[i] = -candidates[i].at(vs[j]);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k].second == static_cast<int>(j)) row[m + k] = Rat(1);
        lp.add_eq(std::move(row), Rat(0));
    }
    return lp.feasible();
}

} // namespace pact
