#include "doctest.h"

#include "pact/compose.hpp"
#include "pact/errors.hpp"
#include "pact/fixtures.hpp"
#include "pact/generate.hpp"
#include "pact/oracle.hpp"
#include "pact/reach.hpp"

using namespace pact;

namespace {

StateSet named(const ProbAutomaton& a, std::initializer_list<const char*> names) {
    StateSet s(a.size());
    for (auto* n : names) {
        int ix = a.find_state(n);
        REQUIRE(ix >= 0);
        s.set(ix);
    }
    return s;
}

} // namespace

TEST_CASE("bounded reach on the coin products") {
    auto prod = fig1_coin_product();
    StateSet C = named(prod, {"(s,t)", "(r,t)", "(s1,t)", "(s3,t)"});
    StateSet Cp = named(prod, {"(s1,t2)", "(s3,t1)"});
    int st = prod.find_state("(s,t)"), rt = prod.find_state("(r,t)");
    auto from_r = bounded_reach(prod, rt, C, Cp, 2, OptMode::sup);
    CHECK(from_r.value == Rat(9, 25));
    auto from_s = bounded_reach(prod, st, C, Cp, 2, OptMode::sup);
    CHECK(from_s.value == Rat(17, 50));
    // witnesses replay bit-exactly
    CHECK(replay_bounded(prod, rt, C, Cp, 2, from_r.witness) == from_r.value);
    CHECK(replay_bounded(prod, st, C, Cp, 2, from_s.witness) == from_s.value);
    // base cases
    int target = prod.find_state("(s1,t2)");
    CHECK(bounded_reach(prod, target, C, Cp, 0, OptMode::sup).value.is_one());
    CHECK(bounded_reach(prod, target, C, Cp, 3, OptMode::inf).value.is_one());
    int outside = prod.find_state("(s2,t)");
    CHECK(bounded_reach(prod, outside, C, Cp, 0, OptMode::sup).value.is_zero());
}

TEST_CASE("bounded reach is monotone in the horizon and dominates inf") {
    auto a = fixture_automaton("ex51");
    StateSet C = named(a, {"s", "r", "s1", "s3"});
    StateSet Cp = named(a, {"s5"});
    Rat prev;
    for (int n = 0; n <= 5; ++n) {
        auto sup = bounded_reach(a, 0, C, Cp, n, OptMode::sup);
        auto inf = bounded_reach(a, 0, C, Cp, n, OptMode::inf);
        CHECK(sup.value >= inf.value);
        CHECK(sup.value >= prev);
        prev = sup.value;
    }
    auto unb = unbounded_reach(a, 0, C, Cp, OptMode::sup);
    CHECK(prev == unb.value); // converged by then on this fixture
}

TEST_CASE("unbounded reach on the weak example") {
    auto a = fixture_automaton("ex51");
    int r = a.find_state("r");
    StateSet C = named(a, {"r", "s1"});
    StateSet Cp = named(a, {"s5"});
    auto res = unbounded_reach(a, r, C, Cp, OptMode::sup);
    CHECK(res.value == Rat(3, 10));
    CHECK(replay_unbounded(a, r, C, Cp, res.witness) == res.value);
    // empty target
    CHECK(unbounded_reach(a, r, C, StateSet(a.size()), OptMode::sup).value.is_zero());
    // state already in the target
    CHECK(unbounded_reach(a, a.find_state("s5"), C, Cp, OptMode::inf).value.is_one());
}

TEST_CASE("pattern events on the ex35 fixture") {
    auto a = fixture_automaton("ex35");
    StateSet A(a.size());
    A.set(a.find_state("s1"));
    A.set(a.find_state("s3"));
    PatternSet pats({{a.all_states(), A, A}});
    auto from_s = pattern_opt(a, a.find_state("s"), pats, OptMode::sup);
    auto from_r = pattern_opt(a, a.find_state("r"), pats, OptMode::sup);
    CHECK(from_s.value == Rat(19, 50));
    CHECK(from_r.value == Rat(39, 100));
    CHECK(replay_pattern(a, a.find_state("s"), pats, from_s.witness) == from_s.value);
    CHECK(replay_pattern(a, a.find_state("r"), pats, from_r.witness) == from_r.value);
    // the cone of the empty extension
    StateSet own(a.size());
    own.set(a.find_state("s"));
    PatternSet self({{own}});
    CHECK(pattern_opt(a, a.find_state("s"), self, OptMode::inf).value.is_one());
}

TEST_CASE("pattern sets prune extensions for plain cones") {
    auto a = fixture_automaton("fig1");
    StateSet top = named(a, {"s", "r"});
    StateSet s1 = named(a, {"s1"});
    PatternSet ps({{top}, {top, s1}});
    CHECK(ps.size() == 2);
    CHECK_FALSE(ps.is_prefix_free());
    auto pruned = ps.pruned_prefix_free();
    CHECK(pruned.size() == 1);
    CHECK(pruned.is_prefix_free());
    // the cone of the shorter pattern subsumes the longer one
    CHECK(pattern_opt(a, 0, ps, OptMode::sup).value.is_one());
}

TEST_CASE("until events decompose into pattern unions") {
    // nu(C,Cp,j) equals the union of the patterns C^k Cp for k <= j
    GenParams g;
    g.states = 4;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        g.seed = seed;
        auto a = generate_random(g);
        SplitMix rng(seed * 99 + 5);
        StateSet C(a.size()), Cp(a.size());
        for (int u = 0; u < a.size(); ++u) {
            if (rng.below(2)) C.set(u);
            if (rng.below(3) == 0) Cp.set(u);
        }
        int j = 2;
        std::vector<std::vector<StateSet>> pats;
        StateSet Cgate = C.minus(Cp);
        for (int k = 0; k <= j; ++k) {
            std::vector<StateSet> pat(k, Cgate);
            pat.push_back(Cp);
            pats.push_back(std::move(pat));
        }
        PatternSet ps(std::move(pats));
        for (int s = 0; s < a.size(); ++s)
            for (auto mode : {OptMode::sup, OptMode::inf}) {
                Rat via_pattern = pattern_opt(a, s, ps, mode).value;
                Rat via_reach = bounded_reach(a, s, C, Cp, j, mode).value;
                CHECK(via_pattern == via_reach);
            }
    }
}

TEST_CASE("stuttering events on the weak example") {
    auto a = fixture_automaton("ex51");
    // the two-until disjunction written with the literal sets
    PatternSet from_r_pats({{named(a, {"r", "s1"}), named(a, {"s5"})},
                            {named(a, {"r", "s3"}), named(a, {"s4"})}});
    auto vr = stuttering_pattern_opt(a, a.find_state("r"), from_r_pats, OptMode::sup);
    CHECK(vr.value == Rat(9, 25));
    CHECK(replay_stuttering(a, a.find_state("r"), from_r_pats, vr.witness) == vr.value);
    PatternSet both_pats({{named(a, {"s", "r", "s1"}), named(a, {"s5"})},
                          {named(a, {"s", "r", "s3"}), named(a, {"s4"})}});
    auto vs = stuttering_pattern_opt(a, a.find_state("s"), both_pats, OptMode::sup);
    CHECK(vs.value == Rat(17, 50));
    auto vr2 = stuttering_pattern_opt(a, a.find_state("r"), both_pats, OptMode::sup);
    CHECK(vr2.value == Rat(9, 25));
    // immediate acceptance
    StateSet own(a.size());
    own.set(a.find_state("s"));
    PatternSet self({{own}});
    CHECK(stuttering_pattern_opt(a, a.find_state("s"), self, OptMode::inf).value.is_one());
    // skipping a leading set entirely
    PatternSet skip({{named(a, {"s1"}), own}});
    CHECK(stuttering_pattern_opt(a, a.find_state("s"), skip, OptMode::sup).value.is_one());
}

TEST_CASE("stuttering closure of a single until equals unbounded reach") {
    GenParams g;
    g.states = 4;
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        g.seed = seed;
        auto a = generate_random(g);
        SplitMix rng(seed);
        StateSet C(a.size()), Cp(a.size());
        for (int u = 0; u < a.size(); ++u) {
            if (rng.below(2)) C.set(u);
            if (rng.below(3) == 0) Cp.set(u);
        }
        PatternSet ps({{C.minus(Cp), Cp}});
        for (int s = 0; s < a.size(); ++s)
            for (auto mode : {OptMode::sup, OptMode::inf}) {
                Rat via_st = stuttering_pattern_opt(a, s, ps, mode).value;
                Rat via_reach = unbounded_reach(a, s, C, Cp, mode).value;
                CHECK(via_st == via_reach);
            }
    }
}

TEST_CASE("acceptor node cap surfaces as a resource error") {
    auto a = fixture_automaton("ex51");
    std::vector<std::vector<StateSet>> pats;
    for (int i = 0; i < 4; ++i) {
        std::vector<StateSet> p;
        for (int j = 0; j < 4; ++j) p.push_back(named(a, {"s", "r", "s1", "s3"}));
        p.push_back(named(a, {"s5"}));
        p[0].set(i); // make them distinct
        pats.push_back(std::move(p));
    }
    CHECK_THROWS_AS(
        stuttering_pattern_opt(a, 0, PatternSet(pats), OptMode::sup, /*node_cap=*/2),
        resource_cap_error);
}

TEST_CASE("engines agree with brute-force scheduler enumeration") {
    GenParams g;
    g.states = 5;
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        g.seed = seed;
        auto a = generate_random(g);
        SplitMix rng(seed + 1);
        StateSet C(a.size()), Cp(a.size());
        for (int u = 0; u < a.size(); ++u) {
            if (rng.below(2)) C.set(u);
            if (rng.below(3) == 0) Cp.set(u);
        }
        for (int n = 0; n <= 3; ++n)
            for (int s = 0; s < a.size(); ++s) {
                auto [lo, hi] = brute_bounded_extrema(a, s, C, Cp, n);
                CHECK(bounded_reach(a, s, C, Cp, n, OptMode::inf).value == lo);
                CHECK(bounded_reach(a, s, C, Cp, n, OptMode::sup).value == hi);
            }
        for (int s = 0; s < a.size(); ++s) {
            auto [lo, hi] = brute_unbounded_extrema(a, s, C, Cp);
            CHECK(unbounded_reach(a, s, C, Cp, OptMode::inf).value == lo);
            CHECK(unbounded_reach(a, s, C, Cp, OptMode::sup).value == hi);
        }
    }
}

TEST_CASE("achievable value sets and min-positive") {
    auto a = fixture_automaton("fig1");
    StateSet C = a.all_states();
    StateSet Cp = named(a, {"s1"});
    auto vals = bounded_value_set(a, a.find_state("s"), C, Cp, 1);
    CHECK(vals == std::set<Rat>{Rat(3, 10), Rat(1, 2)});
    auto mp = min_positive(vals);
    REQUIRE(mp.has_value());
    CHECK(*mp == Rat(3, 10));
    CHECK_FALSE(min_positive(std::set<Rat>{Rat(0)}).has_value());
}
