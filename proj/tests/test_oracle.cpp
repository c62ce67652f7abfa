#include "doctest.h"

#include "pact/check.hpp"
#include "pact/fixtures.hpp"
#include "pact/generate.hpp"
#include "pact/oracle.hpp"
#include "pact/relations.hpp"

using namespace pact;

TEST_CASE("fig1 s and r stay equivalent under a depth-3 bounded budget") {
    auto a = fixture_automaton("fig1");
    FormulaBudget b;
    b.fragment = Fragment::pctl_minus_i;
    b.depth = 3;
    auto res = logical_equiv(a, a.find_state("s"), a.find_state("r"), b);
    CHECK(res.equivalent);
    // reflexivity
    auto self = logical_equiv(a, a.find_state("s"), a.find_state("s"), b);
    CHECK(self.equivalent);
    // symmetry of the verdict
    auto sym = logical_equiv(a, a.find_state("r"), a.find_state("s"), b);
    CHECK(sym.equivalent == res.equivalent);
}

TEST_CASE("ex35 is distinguished under the star depth-2 budget with the paper values") {
    auto a = fixture_automaton("ex35");
    FormulaBudget b;
    b.fragment = Fragment::pctl_star_minus_i;
    b.depth = 2;
    auto res = logical_equiv(a, a.find_state("s"), a.find_state("r"), b);
    CHECK_FALSE(res.equivalent);
    CHECK_FALSE(res.event_desc.empty());
}

TEST_CASE("distinguished formulas are certified by the model checker") {
    auto a = fixture_automaton("ex35");
    FormulaBudget b;
    b.fragment = Fragment::pctl_minus_i;
    b.depth = 2;
    int s = a.find_state("s"), r = a.find_state("r");
    auto res = logical_equiv(a, s, r, b);
    CHECK_FALSE(res.equivalent); // the depth-2 until events genuinely differ
    REQUIRE(res.formula.has_value());
    auto sat = sat_states(a, *res.formula);
    CHECK(sat[s]);
    CHECK_FALSE(sat[r]);
    CHECK(res.value_left != res.value_right);
}

TEST_CASE("label-distinct states are distinguished by an atom") {
    auto a = fixture_automaton("fig1");
    FormulaBudget b;
    b.fragment = Fragment::pctl_minus_i;
    b.depth = 1;
    auto res = logical_equiv(a, a.find_state("s1"), a.find_state("s2"), b);
    CHECK_FALSE(res.equivalent);
    REQUIRE(res.formula.has_value());
    auto sat = sat_states(a, *res.formula);
    CHECK(sat[a.find_state("s1")]);
    CHECK_FALSE(sat[a.find_state("s2")]);
}

TEST_CASE("budget monotonicity: larger depth only refines") {
    GenParams g;
    g.states = 4;
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
        g.seed = seed;
        auto a = generate_random(g);
        FormulaBudget b1, b2;
        b1.fragment = b2.fragment = Fragment::pctl_minus_i;
        b1.depth = 1;
        b2.depth = 2;
        auto p1 = oracle_partition(a, b1);
        auto p2 = oracle_partition(a, b2);
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                if (p2[x] == p2[y]) CHECK(p1[x] == p1[y]);
    }
}

TEST_CASE("path event enumeration covers the grammar shapes") {
    auto a = ProbAutomaton::parse("state u label a\nstate v label b\n"
                                  "trans u -> 1:v\ntrans v -> 1:u\n");
    FormulaBudget b;
    b.fragment = Fragment::pctl_minus_i;
    b.depth = 2;
    auto evs = enumerate_path_events(a, b);
    StateSet sat_a = a.states_with_prop(a.find_prop("a"));
    bool has_x_on_a = false, has_buntil2 = false;
    CheckCaps caps;
    for (auto& e : evs) {
        if (e->kind == PathFormula::Kind::next && e->lhs->kind == PathFormula::Kind::state) {
            auto sat = sat_states(a, e->lhs->state);
            StateSet got(a.size());
            for (int s = 0; s < a.size(); ++s)
                if (sat[s]) got.set(s);
            if (got == sat_a) has_x_on_a = true;
        }
        if (e->kind == PathFormula::Kind::buntil && e->bound == 2) has_buntil2 = true;
    }
    CHECK(has_x_on_a);
    CHECK(has_buntil2);
    // the \X fragment never emits X or bounded untils
    FormulaBudget nb;
    nb.fragment = Fragment::pctl_no_x;
    for (auto& e : enumerate_path_events(a, nb)) {
        CHECK(e->kind != PathFormula::Kind::next);
        CHECK(e->kind != PathFormula::Kind::buntil);
    }
}

TEST_CASE("safe preorder on fig1 matches the simulation direction") {
    auto a = fixture_automaton("fig1");
    FormulaBudget b;
    b.fragment = Fragment::pctl_safe;
    b.depth = 2;
    b.nesting = 1;
    int s = a.find_state("s"), r = a.find_state("r");
    auto below = logical_preorder(a, s, r, b);
    CHECK(below.below); // whatever r guarantees from below, s can too
    auto self = logical_preorder(a, s, s, b);
    CHECK(self.below);
    auto refuted = logical_preorder(a, a.find_state("s1"), a.find_state("s2"), b);
    CHECK_FALSE(refuted.below);
    REQUIRE(refuted.refuting.has_value());
    auto sat = sat_states(a, *refuted.refuting);
    CHECK(sat[a.find_state("s2")]);
    CHECK_FALSE(sat[a.find_state("s1")]);
}

TEST_CASE("distinguishing state formulas hit their targets") {
    auto a = fixture_automaton("ce44");
    FormulaBudget b;
    b.fragment = Fragment::pctl_minus_i;
    b.depth = 1;
    Relation classes = strong_1_depth(a);
    SUBCASE("a union of two absorbing classes") {
        StateSet target(a.size());
        target.set(a.find_state("s1"));
        target.set(a.find_state("s2"));
        auto f = distinguishing_state_formula(a, classes, target, b);
        auto sat = sat_states(a, f);
        for (int u = 0; u < a.size(); ++u) CHECK(sat[u] == target.test(u));
    }
    SUBCASE("a singleton absorbing class") {
        StateSet target(a.size());
        target.set(a.find_state("s3"));
        auto f = distinguishing_state_formula(a, classes, target, b);
        auto sat = sat_states(a, f);
        for (int u = 0; u < a.size(); ++u) CHECK(sat[u] == target.test(u));
    }
    SUBCASE("non-union targets are rejected") {
        auto fig = fixture_automaton("fig1");
        Relation cls = strong_1_depth(fig); // s and r share a class
        StateSet target(fig.size());
        target.set(fig.find_state("s"));
        CHECK_THROWS_AS(distinguishing_state_formula(fig, cls, target, b),
                        std::invalid_argument);
    }
}

TEST_CASE("fig1 classes distinguish the three-successor union") {
    auto a = fixture_automaton("fig1");
    FormulaBudget b;
    b.fragment = Fragment::pctl_minus_i;
    b.depth = 1;
    Relation classes = strong_1_depth(a);
    StateSet target(a.size());
    for (auto* n : {"s1", "s2", "s3"}) target.set(a.find_state(n));
    auto f = distinguishing_state_formula(a, classes, target, b);
    auto sat = sat_states(a, f);
    for (int u = 0; u < a.size(); ++u) CHECK(sat[u] == target.test(u));
}

TEST_CASE("brute-force extrema match on tiny hand cases") {
    auto a = fixture_automaton("fig1");
    StateSet C = a.all_states();
    StateSet Cp(a.size());
    Cp.set(a.find_state("s1"));
    auto [lo, hi] = brute_bounded_extrema(a, a.find_state("s"), C, Cp, 1);
    CHECK(lo == Rat(3, 10));
    CHECK(hi == Rat(1, 2));
    auto [ulo, uhi] = brute_unbounded_extrema(a, a.find_state("s"), C, Cp);
    CHECK(ulo == Rat(3, 10));
    CHECK(uhi == Rat(1, 2));
}
