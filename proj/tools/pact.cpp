#include "CLI11.hpp"

#include "pact/check.hpp"
#include "pact/compose.hpp"
#include "pact/errors.hpp"
#include "pact/fixtures.hpp"
#include "pact/generate.hpp"
#include "pact/oracle.hpp"
#include "pact/parallel.hpp"
#include "pact/reach.hpp"
#include "pact/relations.hpp"
#include "pact/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int EXIT_HOLDS = 0;
constexpr int EXIT_FAILS = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_RESOURCE = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pact::parse_error(0, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

pact::ProbAutomaton load_model(const std::string& path) {
    return pact::ProbAutomaton::parse(slurp(path));
}

pact::StateId need_state(const pact::ProbAutomaton& a, const std::string& name) {
    pact::StateId s = a.find_state(name);
    if (s < 0) throw pact::parse_error(0, "no state named '" + name + "'");
    return s;
}

pact::Direction parse_direction(const std::string& d) {
    if (d == "at-least" || d == "match-at-least") return pact::Direction::at_least;
    if (d == "at-most" || d == "match-at-most") return pact::Direction::at_most;
    if (d == "both") return pact::Direction::both;
    throw pact::parse_error(0, "unknown direction '" + d + "'");
}

int cmd_parse(const std::string& file) {
    auto a = load_model(file);
    std::cout << "ok: " << (a.name.empty() ? "model" : a.name) << " with " << a.size()
              << " states, " << a.props.size() << " propositions\n";
    if (!a.total())
        std::cout << "note: some states have no outgoing transition\n";
    return EXIT_HOLDS;
}

int cmd_mc(const std::string& file, const std::string& state, const std::string& formula_text) {
    auto a = load_model(file);
    auto f = pact::parse_formula(formula_text);
    auto res = pact::check(a, f);
    for (int s = 0; s < a.size(); ++s) {
        std::cout << a.display(s) << ": " << (res.sat[s] ? "holds" : "fails");
        if (res.top_values)
            std::cout << "  ["
                      << (res.top_mode == pact::OptMode::inf ? "inf" : "sup") << " "
                      << (*res.top_values)[s].str() << "]";
        std::cout << "\n";
    }
    if (state.empty()) return EXIT_HOLDS;
    pact::StateId s = need_state(a, state);
    return res.sat[s] ? EXIT_HOLDS : EXIT_FAILS;
}

int cmd_relate(const std::string& file, const std::string& relation, int depth,
               const std::string& pair, const std::string& direction, bool principal_only,
               int weak_len, int antichain) {
    auto a = load_model(file);
    pact::RelationQuery q;
    q.name = relation;
    q.depth = depth;
    q.direction = parse_direction(direction);
    q.downset_mode =
        principal_only ? pact::DownsetMode::principal_only : pact::DownsetMode::full;
    if (weak_len > 0) q.caps.weak_pattern_len = weak_len;
    if (antichain > 0) q.caps.weak_antichain_size = antichain;
    std::optional<std::pair<pact::StateId, pact::StateId>> pr;
    if (!pair.empty()) {
        auto comma = pair.rfind(',');
        // display names may contain commas; try to resolve both ways
        pact::StateId x = -1, y = -1;
        for (std::size_t cut = pair.find(','); cut != std::string::npos;
             cut = pair.find(',', cut + 1)) {
            x = a.find_state(pair.substr(0, cut));
            y = a.find_state(pair.substr(cut + 1));
            if (x >= 0 && y >= 0) break;
        }
        (void)comma;
        if (x < 0 || y < 0) throw pact::parse_error(0, "cannot resolve pair '" + pair + "'");
        pr = std::make_pair(x, y);
    }
    auto v = pact::run_relation_query(a, q, pr);
    std::cout << v.text(a);
    if (!pr) return EXIT_HOLDS;
    return v.related ? EXIT_HOLDS : EXIT_FAILS;
}

int cmd_compose(const std::string& f, const std::string& g, const std::string& out) {
    auto a = load_model(f);
    auto b = load_model(g);
    auto prod = pact::interleave(a, b);
    std::ofstream os(out, std::ios::binary);
    if (!os) throw pact::parse_error(0, "cannot write '" + out + "'");
    os << prod.to_text();
    std::cout << "wrote " << prod.size() << " states to " << out << "\n";
    return EXIT_HOLDS;
}

struct TaxoEntry {
    std::string name;
    int depth;
    pact::Relation rel;
};

int cmd_taxonomy(const std::string& file, int max_depth) {
    auto a = load_model(file);
    pact::RelCaps caps;
    caps.weak_pattern_len = 3;
    std::vector<TaxoEntry> entries;
    entries.push_back({"strong-prob-bisim", -1, pact::strong_prob_bisim(a)});
    entries.push_back({"branching-prob-bisim", -1, pact::branching_prob_bisim(a, -1, caps)});
    entries.push_back({"strong-1", -1, pact::strong_1_depth(a)});
    for (int i = 2; i <= max_depth; ++i)
        entries.push_back({"strong-branching-" + std::to_string(i), i,
                           pact::strong_branching_i(a, i)});
    for (int i = 2; i <= max_depth; ++i)
        entries.push_back({"strong-" + std::to_string(i), i, pact::strong_i_depth(a, i)});
    entries.push_back({"weak-branching-bisim", -1, pact::weak_branching_bisim(a)});
    entries.push_back({"weak-bisim", -1, pact::weak_bisim(a, caps)});
    entries.push_back({"strong-prob-sim", -1, pact::strong_prob_sim(a)});
    entries.push_back({"branching-sim-2", 2, pact::branching_sim_i(a, 2, caps)});
    entries.push_back({"sim-2", 2, pact::sim_i_depth(a, 2, caps)});
    entries.push_back({"weak-branching-sim", -1, pact::weak_branching_sim(a, caps)});
    entries.push_back({"weak-sim", -1, pact::weak_sim(a, caps)});

    // the expected containments of the strong/weak taxonomy pictures
    auto expected = [&](const std::string& x, const std::string& y) {
        auto is = [&](const std::string& p) { return x.rfind(p, 0) == 0; };
        if (y == "strong-prob-sim" && x == "strong-prob-bisim") return true;
        if (x == "strong-prob-bisim") return true; // finest equivalence shown
        if (is("strong-") && !is("strong-prob") && y == "strong-1") return true;
        if (x == "branching-prob-bisim" && (y == "weak-branching-bisim" || y == "weak-bisim"))
            return true;
        return false;
    };

    std::cout << "relation classes (or preorder size):\n";
    for (auto& e : entries) {
        std::cout << "  " << e.name << ": ";
        if (e.rel.is_symmetric())
            std::cout << e.rel.num_classes() << " classes\n";
        else {
            int pairs = 0;
            for (int x = 0; x < a.size(); ++x)
                for (int y = 0; y < a.size(); ++y)
                    if (x != y && e.rel.related(x, y)) ++pairs;
            std::cout << pairs << " non-trivial pairs\n";
        }
    }
    std::cout << "\ninclusion matrix (row included in column: y/.)"
              << "  [* marks an expected containment that failed]\n      ";
    for (std::size_t j = 0; j < entries.size(); ++j) std::cout << (j % 10);
    std::cout << "\n";
    int violations = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::cout << (i < 10 ? " " : "") << i << " " << std::string(3, ' ');
        for (std::size_t j = 0; j < entries.size(); ++j) {
            bool inc = entries[i].rel.subset_of(entries[j].rel);
            bool exp = expected(entries[i].name, entries[j].name);
            char c = inc ? 'y' : '.';
            if (exp && !inc) {
                c = '*';
                ++violations;
            }
            std::cout << c;
        }
        std::cout << "  " << entries[i].name << "\n";
    }
    return violations == 0 ? EXIT_HOLDS : EXIT_FAILS;
}

int cmd_regress() {
    // replay the fixture corpus expectations
    int failures = 0;
    auto expect = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "pass" : "FAIL") << ": " << what << "\n";
        if (!ok) ++failures;
    };
    using namespace pact;
    {
        auto a = fixture_automaton("fig1");
        int s = a.find_state("s"), r = a.find_state("r");
        expect(!strong_prob_bisim(a).related(s, r), "fig1: strong-prob-bisim separates s,r");
        expect(strong_1_depth(a).related(s, r), "fig1: strong-1 relates s,r");
        for (int i = 1; i <= 4; ++i)
            expect(strong_branching_i(a, i).related(s, r),
                   "fig1: strong-branching-" + std::to_string(i) + " relates s,r");
        expect(strong_i_depth(a, 2).related(s, r), "fig1: strong-2 relates s,r");
        expect(weak_branching_bisim(a).related(s, r), "fig1: weak-branching relates s,r");
    }
    {
        auto a = fixture_automaton("ex35");
        int s = a.find_state("s"), r = a.find_state("r");
        auto f = parse_formula("P<=0.38 [ X (a1|a3) & X X (a1|a3) ]");
        auto res = check(a, f);
        expect(res.sat[s] && !res.sat[r], "ex35: P<=0.38[Xa&XXa] holds at s only");
        expect(!strong_i_depth(a, 2).related(s, r), "ex35: strong-2 separates s,r");
        expect(strong_branching_i(a, 1).related(s, r), "ex35: strong-branching-1 relates s,r");
        expect(!strong_branching_i(a, 2).related(s, r),
               "ex35: strong-branching-2 separates s,r (bounded until events differ)");
    }
    {
        auto prod = fig1_coin_product();
        int st = prod.find_state("(s,t)"), rt = prod.find_state("(r,t)");
        StateSet C(prod.size()), Cp(prod.size());
        for (auto* n : {"(s,t)", "(r,t)", "(s1,t)", "(s3,t)"}) C.set(prod.find_state(n));
        for (auto* n : {"(s1,t2)", "(s3,t1)"}) Cp.set(prod.find_state(n));
        expect(bounded_reach(prod, st, C, Cp, 2, OptMode::sup).value == Rat(17, 50),
               "products: bounded sup from (s,t) is 17/50");
        expect(bounded_reach(prod, rt, C, Cp, 2, OptMode::sup).value == Rat(9, 25),
               "products: bounded sup from (r,t) is 9/25");
        expect(!strong_branching_i(prod, 2).related(st, rt),
               "products: strong-branching-2 separates (s,t),(r,t)");
    }
    {
        auto a = fixture_automaton("ex51");
        int s = a.find_state("s"), r = a.find_state("r");
        auto f = parse_formula("P<=0.34 [ (top|a1) U a5 | (top|a3) U a4 ]");
        auto res = check(a, f);
        expect(res.sat[s] && !res.sat[r], "ex51: P<=0.34[two untils] holds at s only");
        RelCaps caps;
        caps.weak_pattern_len = 3;
        expect(!weak_bisim(a, caps).related(s, r), "ex51: weak-bisim separates s,r");
    }
    {
        auto a = fixture_automaton("ce44");
        int s = a.find_state("s"), r = a.find_state("r");
        expect(strong_1_depth(a, Direction::both, DownsetMode::principal_only).related(s, r),
               "ce44: principal down-sets wrongly relate s,r");
        expect(!strong_1_depth(a).related(s, r), "ce44: full down-sets separate s,r");
        auto f = parse_formula("P>=1/2 [ X (a1|a2) ]");
        auto res = check(a, f);
        expect(res.sat[r] && !res.sat[s], "ce44: P>=1/2[X(a1|a2)] holds at r only");
    }
    std::cout << (failures == 0 ? "regress: all fixtures pass\n"
                                : "regress: " + std::to_string(failures) + " failures\n");
    return failures == 0 ? EXIT_HOLDS : EXIT_FAILS;
}

int cmd_random(std::uint64_t seed, int states, int maxtrans, int labels,
               const std::string& grid) {
    pact::GenParams p;
    p.seed = seed;
    p.states = states;
    p.max_transitions = maxtrans;
    p.label_alphabet = labels;
    if (!grid.empty()) {
        p.prob_grid.clear();
        std::istringstream is(grid);
        std::string tok;
        while (std::getline(is, tok, ',')) p.prob_grid.push_back(pact::Rat::parse(tok));
    }
    std::cout << pact::generate_random(p).to_text();
    return EXIT_HOLDS;
}

int cmd_suites(int samples, std::uint64_t seed, bool serial, const std::string& witness_dir,
               std::vector<std::string> which) {
    pact::SuiteConfig cfg;
    cfg.samples = samples;
    cfg.seed_base = seed;
    cfg.parallel = !serial;
    auto reports = pact::run_property_suites(cfg, which);
    bool ok = true;
    for (auto& r : reports) {
        std::cout << r.text();
        if (!r.passed()) ok = false;
        if (!r.witness_models.empty() && !witness_dir.empty()) {
            std::ofstream os(witness_dir + "/" + r.suite + ".witness.pa");
            for (auto& w : r.witness_models) os << w << "\n";
        }
    }
    return ok ? EXIT_HOLDS : EXIT_FAILS;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic automata characterization toolkit"};
    app.require_subcommand(1);

    std::string file, file2, out, state, formula, relation, pair, direction = "both", grid;
    int depth = -1, weak_len = -1, antichain = -1, max_depth = 3;
    bool principal_only = false, serial = false;
    std::uint64_t seed = 1;
    int states = 5, maxtrans = 2, labels = 2, samples = 200;
    std::string witness_dir = ".";
    std::vector<std::string> which;

    auto* parse_cmd = app.add_subcommand("parse", "validate a model file");
    parse_cmd->add_option("file", file)->required();

    auto* mc_cmd = app.add_subcommand("mc", "model check a formula");
    mc_cmd->add_option("file", file)->required();
    mc_cmd->add_option("--state", state, "state whose verdict drives the exit code");
    mc_cmd->add_option("--formula", formula)->required();

    auto* rel_cmd = app.add_subcommand("relate", "compute a (bi)simulation relation");
    rel_cmd->add_option("file", file)->required();
    rel_cmd->add_option("--relation", relation)->required()->check(CLI::IsMember(pact::relation_names()));
    rel_cmd->add_option("--depth", depth, "depth index for the i-indexed relations");
    rel_cmd->add_option("--pair", pair, "s,r pair to report on");
    rel_cmd->add_option("--direction", direction, "at-least | at-most | both (default both)");
    rel_cmd->add_flag("--principal-only", principal_only,
                      "restrict down-sets to principal ones");
    rel_cmd->add_option("--weak-pattern-len", weak_len);
    rel_cmd->add_option("--antichain", antichain);

    auto* comp_cmd = app.add_subcommand("compose", "interleave two models");
    comp_cmd->add_option("file", file)->required();
    comp_cmd->add_option("file2", file2)->required();
    comp_cmd->add_option("-o,--output", out)->required();

    auto* taxo_cmd = app.add_subcommand("taxonomy", "all relations plus the inclusion matrix");
    taxo_cmd->add_option("file", file)->required();
    taxo_cmd->add_option("--max-depth", max_depth);

    app.add_subcommand("regress", "replay the fixture corpus");

    auto* rnd_cmd = app.add_subcommand("random", "emit a reproducible random model");
    rnd_cmd->add_option("--seed", seed);
    rnd_cmd->add_option("--states", states);
    rnd_cmd->add_option("--max-transitions", maxtrans);
    rnd_cmd->add_option("--labels", labels);
    rnd_cmd->add_option("--grid", grid, "comma-separated probabilities");

    auto* suite_cmd = app.add_subcommand("suites", "run the property suites");
    suite_cmd->add_option("--samples", samples);
    suite_cmd->add_option("--seed", seed);
    suite_cmd->add_flag("--serial", serial, "disable the OpenMP path");
    suite_cmd->add_option("--witness-dir", witness_dir);
    suite_cmd->add_option("--suite", which, "subset of suites to run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_HOLDS : EXIT_USAGE;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(file);
        if (mc_cmd->parsed()) return cmd_mc(file, state, formula);
        if (rel_cmd->parsed())
            return cmd_relate(file, relation, depth, pair, direction, principal_only, weak_len,
                              antichain);
        if (comp_cmd->parsed()) return cmd_compose(file, file2, out);
        if (taxo_cmd->parsed()) return cmd_taxonomy(file, max_depth);
        if (app.get_subcommand("regress")->parsed()) return cmd_regress();
        if (rnd_cmd->parsed()) return cmd_random(seed, states, maxtrans, labels, grid);
        if (suite_cmd->parsed()) return cmd_suites(samples, seed, serial, witness_dir, which);
    } catch (const pact::resource_cap_error& e) {
        std::cerr << "resource cap '" << e.cap_name << "': " << e.what() << "\n";
        return EXIT_RESOURCE;
    } catch (const pact::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const pact::fragment_error& e) {
        std::cerr << "fragment error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
