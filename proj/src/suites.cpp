#include "pact/suites.hpp"

#include "pact/compose.hpp"
#include "pact/fixtures.hpp"
#include "pact/oracle.hpp"
#include "pact/parallel.hpp"
#include "pact/reach.hpp"
#include "pact/relations.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pact {

namespace {
bool parallel_flag = true;
}

void set_parallel(bool on) { parallel_flag = on; }
bool parallel_enabled() { return parallel_flag; }

namespace {

std::vector<int> normalize_partition(std::vector<int> cid) {
    std::vector<int> remap(cid.size(), -1);
    int next = 0;
    for (int& c : cid) {
        if (remap[c] < 0) remap[c] = next++;
        c = remap[c];
    }
    return cid;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    return normalize_partition(a) == normalize_partition(b);
}

struct SampleOutcome {
    std::vector<std::string> failures; // empty = pass
};

SuiteReport run_per_sample(const std::string& name, const SuiteConfig& cfg,
                           const std::function<SampleOutcome(const ProbAutomaton&, int)>& body) {
    SuiteReport rep;
    rep.suite = name;
    rep.samples = cfg.samples;
    std::vector<SampleOutcome> out(cfg.samples);
    std::vector<ProbAutomaton> autos(cfg.samples);
    for (int k = 0; k < cfg.samples; ++k) {
        GenParams g = cfg.gen;
        g.seed = cfg.seed_base + static_cast<std::uint64_t>(k);
        autos[k] = generate_random(g);
    }
    bool prev = parallel_enabled();
    set_parallel(cfg.parallel);
    parallel_for(static_cast<std::size_t>(cfg.samples),
                 [&](std::size_t k) { out[k] = body(autos[k], static_cast<int>(k)); });
    set_parallel(prev);
    for (int k = 0; k < cfg.samples; ++k) {
        if (out[k].failures.empty()) continue;
        ++rep.failures;
        for (auto& f : out[k].failures)
            rep.lines.push_back("sample " + std::to_string(k) + " (seed " +
                                std::to_string(cfg.seed_base + k) + "): " + f);
        rep.witness_models.push_back(autos[k].to_text());
    }
    return rep;
}

std::string partition_str(const std::vector<int>& cid) {
    std::string s = "[";
    for (std::size_t i = 0; i < cid.size(); ++i)
        s += (i ? " " : "") + std::to_string(cid[i]);
    return s + "]";
}

} // namespace

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << (samples - failures) << "/" << samples << " pass\n";
    for (auto& l : lines) os << "  " << l << "\n";
    os << "---\n";
    os << "suite: " << suite << "\n";
    os << "samples: " << samples << "\n";
    os << "failures: " << failures << "\n";
    os << "witness-file: " << (witness_models.empty() ? "-" : suite + ".witness.pa") << "\n";
    return os.str();
}

SuiteReport characterization_suite(const SuiteConfig& cfg) {
    return run_per_sample("characterization", cfg, [&](const ProbAutomaton& a, int) {
        SampleOutcome out;
        auto check = [&](const char* what, const Relation& rel, const std::vector<int>& oracle) {
            if (!same_partition(rel.class_of(), oracle))
                out.failures.push_back(std::string(what) + ": relation " +
                                       partition_str(normalize_partition(rel.class_of())) +
                                       " vs oracle " +
                                       partition_str(normalize_partition(oracle)));
        };
        {
            FormulaBudget b;
            b.fragment = Fragment::pctl_minus_i;
            b.depth = 1;
            check("strong-branching-1 = PCTL-_1", strong_branching_i(a, 1), oracle_partition(a, b));
        }
        {
            FormulaBudget b;
            b.fragment = Fragment::pctl_minus_i;
            b.depth = 2;
            check("strong-branching-2 = PCTL-_2", strong_branching_i(a, 2), oracle_partition(a, b));
        }
        {
            FormulaBudget b;
            b.fragment = Fragment::pctl_star_minus_i;
            b.depth = 2;
            check("strong-2 = PCTL*-_2", strong_i_depth(a, 2), oracle_partition(a, b));
        }
        {
            FormulaBudget b;
            b.fragment = Fragment::pctl_no_x;
            b.nesting = -1;
            check("weak-branching = PCTL\\X", weak_branching_bisim(a), oracle_partition(a, b));
        }
        return out;
    });
}

SuiteReport inclusion_suite(const SuiteConfig& cfg) {
    return run_per_sample("inclusion", cfg, [&](const ProbAutomaton& a, int k) {
        SampleOutcome out;
        auto expect_subset = [&](const char* what, const Relation& fine, const Relation& coarse) {
            if (!fine.subset_of(coarse)) out.failures.push_back(what);
        };
        Relation b1 = strong_branching_i(a, 1);
        Relation b2 = strong_branching_i(a, 2);
        Relation b3 = strong_branching_i(a, 3);
        Relation d1 = strong_i_depth(a, 1);
        Relation d2 = strong_i_depth(a, 2);
        Relation sp = strong_prob_bisim(a);
        Relation sim = strong_prob_sim(a);
        Relation bsim2 = branching_sim_i(a, 2);
        expect_subset("branching-2 subset of branching-1", b2, b1);
        expect_subset("branching-3 subset of branching-2", b3, b2);
        expect_subset("strong-1 = branching-1", d1, b1);
        expect_subset("branching-1 = strong-1", b1, d1);
        expect_subset("strong-2 subset of branching-2", d2, b2);
        expect_subset("strong-prob-bisim subset of strong-2", sp, d2);
        expect_subset("strong-prob-bisim subset of strong-prob-sim", sp, sim);
        expect_subset("strong-prob-sim subset of branching-sim-2", sim, bsim2);
        // safe-fragment soundness of the simulation preorder
        {
            FormulaBudget b;
            b.fragment = Fragment::pctl_safe;
            b.depth = 2;
            b.nesting = 1;
            Relation logical = oracle_safe_preorder(a, b);
            if (!sim.subset_of(logical))
                out.failures.push_back("strong-prob-sim not below the safe-fragment preorder");
        }
        // congruence under interleaving
        {
            GenParams g = cfg.gen;
            g.seed = cfg.seed_base + 100000 + static_cast<std::uint64_t>(k);
            g.states = cfg.compose_states;
            g.max_transitions = 1;
            ProbAutomaton c = generate_random(g);
            ProbAutomaton prod = interleave(a, c);
            Relation p1 = strong_1_depth(prod);
            Relation pp = strong_prob_bisim(prod);
            Relation ps = strong_prob_sim(prod);
            const int nb = c.size();
            for (int s = 0; s < a.size(); ++s)
                for (int r = 0; r < a.size(); ++r) {
                    if (s == r) continue;
                    for (int t = 0; t < nb; ++t) {
                        int si = s * nb + t, ri = r * nb + t;
                        if (d1.related(s, r) && !p1.related(si, ri))
                            out.failures.push_back("strong-1 congruence broke at (" +
                                                   a.display(s) + "," + a.display(r) + ") with t=" +
                                                   c.display(t));
                        if (sp.related(s, r) && !pp.related(si, ri))
                            out.failures.push_back("strong-prob-bisim congruence broke");
                        if (sim.related(s, r) && !ps.related(si, ri))
                            out.failures.push_back("strong-prob-sim congruence broke");
                    }
                }
        }
        return out;
    });
}

SuiteReport engine_oracle_suite(const SuiteConfig& cfg) {
    return run_per_sample("engine-oracle", cfg, [&](const ProbAutomaton& a, int k) {
        SampleOutcome out;
        SplitMix rng(cfg.seed_base + 777 + static_cast<std::uint64_t>(k));
        auto random_set = [&]() {
            StateSet s(a.size());
            for (int u = 0; u < a.size(); ++u)
                if (rng.below(2)) s.set(u);
            return s;
        };
        for (int round = 0; round < 3; ++round) {
            StateSet C = random_set(), Cp = random_set();
            int n = 1 + static_cast<int>(rng.below(3));
            for (int s = 0; s < a.size(); ++s) {
                auto [lo, hi] = brute_bounded_extrema(a, s, C, Cp, n);
                auto sup = bounded_reach(a, s, C, Cp, n, OptMode::sup);
                auto inf = bounded_reach(a, s, C, Cp, n, OptMode::inf);
                if (sup.value != hi || inf.value != lo) {
                    out.failures.push_back("bounded_reach mismatch vs scheduler enumeration at " +
                                           a.display(s) + " horizon " + std::to_string(n));
                    continue;
                }
                if (replay_bounded(a, s, C, Cp, n, sup.witness) != sup.value ||
                    replay_bounded(a, s, C, Cp, n, inf.witness) != inf.value)
                    out.failures.push_back("bounded witness replay mismatch at " + a.display(s));
            }
            // unbounded engines against stationary enumeration
            for (int s = 0; s < a.size(); ++s) {
                auto [lo, hi] = brute_unbounded_extrema(a, s, C, Cp);
                auto sup = unbounded_reach(a, s, C, Cp, OptMode::sup);
                auto inf = unbounded_reach(a, s, C, Cp, OptMode::inf);
                if (sup.value != hi || inf.value != lo) {
                    out.failures.push_back("unbounded_reach mismatch vs policy enumeration at " +
                                           a.display(s));
                    continue;
                }
                if (replay_unbounded(a, s, C, Cp, sup.witness) != sup.value)
                    out.failures.push_back("unbounded witness replay mismatch at " + a.display(s));
            }
        }
        return out;
    });
}

SuiteReport noncongruence_suite() {
    SuiteReport rep;
    rep.suite = "noncongruence";
    rep.samples = 1;
    ProbAutomaton fig1 = fixture_automaton("fig1");
    ProbAutomaton prod = fig1_coin_product();
    int s = fig1.find_state("s"), r = fig1.find_state("r");
    Relation base = strong_branching_i(fig1, 2);
    int st = prod.find_state("(s,t)"), rt = prod.find_state("(r,t)");
    Relation lifted = strong_branching_i(prod, 2);
    bool related_base = base.related(s, r);
    bool related_prod = lifted.related(st, rt);
    if (!related_base) {
        ++rep.failures;
        rep.lines.push_back("expected fig1 s,r related under strong-branching-2");
    }
    if (related_prod) {
        ++rep.failures;
        rep.lines.push_back("expected the coin product to separate (s,t),(r,t)");
    }
    if (rep.failures == 0)
        rep.lines.push_back(
            "strong-branching-2 relates s,r but not (s,t),(r,t): non-congruence reproduced");
    return rep;
}

std::vector<SuiteReport> run_property_suites(const SuiteConfig& cfg,
                                             const std::vector<std::string>& which) {
    auto want = [&](const char* name) {
        if (which.empty()) return true;
        return std::find(which.begin(), which.end(), name) != which.end();
    };
    std::vector<SuiteReport> out;
    if (want("characterization")) out.push_back(characterization_suite(cfg));
    if (want("inclusion")) out.push_back(inclusion_suite(cfg));
    if (want("engine-oracle")) out.push_back(engine_oracle_suite(cfg));
    if (want("noncongruence")) out.push_back(noncongruence_suite());
    return out;
}

} // namespace pact
