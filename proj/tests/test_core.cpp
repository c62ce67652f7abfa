#include "doctest.h"

#include "pact/automaton.hpp"
#include "pact/combined.hpp"
#include "pact/compose.hpp"
#include "pact/errors.hpp"
#include "pact/fixtures.hpp"
#include "pact/lp.hpp"
#include "pact/relation.hpp"

using namespace pact;

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rat::parse("0.3") == Rat(3, 10));
    CHECK(Rat::parse("3/10") == Rat(3, 10));
    CHECK(Rat::parse("1.25") == Rat(5, 4));
    CHECK(Rat::parse("2/4") == Rat(1, 2));
    CHECK(Rat::parse("1") == Rat(1));
    CHECK(Rat::parse("-1/2") == Rat(-1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(3, 10) * Rat(3, 5)).str() == "9/50");
    CHECK(Rat(7, 7).is_one());
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
}

TEST_CASE("distribution validation") {
    CHECK_THROWS_WITH_AS(Distribution({{0, Rat(3, 10)}, {1, Rat(3, 10)}, {2, Rat(3, 10)}}),
                         "distribution sums to 9/10", std::invalid_argument);
    Distribution d({{1, Rat(1, 2)}, {0, Rat(1, 2)}});
    CHECK(d.entries().front().first == 0);
    CHECK(d.at(1) == Rat(1, 2));
    CHECK(d.at(5) == Rat(0));
    // zero entries get dropped, duplicates merge
    Distribution e({{0, Rat(1, 2)}, {0, Rat(1, 2)}, {3, Rat(0)}});
    CHECK(e.is_dirac());
}

TEST_CASE("model parser on the fig1 left automaton") {
    auto a = fixture_automaton("fig1_left");
    CHECK(a.size() == 4);
    int s = a.find_state("s");
    REQUIRE(s >= 0);
    REQUIRE(a.trans(s).size() == 2);
    CHECK(a.trans(s)[0].at(a.find_state("s1")) == Rat(3, 10));
    CHECK(a.trans(s)[0].at(a.find_state("s3")) == Rat(2, 5));
    CHECK(a.trans(s)[1].at(a.find_state("s1")) == Rat(1, 2));
    // absorbing sugar produced Dirac self-loops
    int s1 = a.find_state("s1");
    REQUIRE(a.trans(s1).size() == 1);
    CHECK(a.trans(s1)[0].is_dirac());
    CHECK(a.trans(s1)[0].at(s1).is_one());
    CHECK(a.total());
}

TEST_CASE("model parser error cases") {
    CHECK_THROWS_AS(ProbAutomaton::parse("state s\ntrans s -> 0.3:s1"), parse_error);
    try {
        ProbAutomaton::parse("state s\nstate s1\nstate s2\nstate s3\n"
                             "trans s -> 0.3:s1 0.3:s2 0.3:s3\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("distribution sums to 9/10") != std::string::npos);
        CHECK(e.line == 5);
    }
    CHECK_THROWS_AS(ProbAutomaton::parse("state 1bad\n"), parse_error);
    // a single absorbing state round-trips to one Dirac self-loop
    auto a = ProbAutomaton::parse("absorbing s1\n");
    CHECK(a.size() == 1);
    CHECK(a.trans(0).size() == 1);
    CHECK(a.trans(0)[0].at(0).is_one());
    // a declared state with no transitions is allowed
    auto b = ProbAutomaton::parse("state s\n");
    CHECK_FALSE(b.total());
}

TEST_CASE("model text round-trips") {
    auto a = fixture_automaton("ex51");
    auto b = ProbAutomaton::parse(a.to_text());
    CHECK(b.size() == a.size());
    for (int s = 0; s < a.size(); ++s) {
        CHECK(b.labels[s] == a.labels[s]);
        REQUIRE(b.trans(s).size() == a.trans(s).size());
        for (std::size_t i = 0; i < a.trans(s).size(); ++i) CHECK(b.trans(s)[i] == a.trans(s)[i]);
    }
}

TEST_CASE("interleave composition shape") {
    const char* right = R"(pa fig1_right
state r label top
absorbing s1 label a1
absorbing s2 label a2
absorbing s3 label a3
init r
trans r -> 3/10:s1 3/10:s2 2/5:s3
trans r -> 2/5:s1 3/10:s2 3/10:s3
trans r -> 1/2:s1 2/5:s2 1/10:s3
)";
    auto a = ProbAutomaton::parse(right);
    auto c = fixture_automaton("coin");
    auto prod = interleave(a, c);
    CHECK(prod.size() == 12);
    int rt = prod.find_state("(r,t)");
    REQUIRE(rt >= 0);
    CHECK(prod.trans(rt).size() == 4); // three r-moves plus one t-move
    // moving on the left holds the right component fixed
    int s1t = prod.find_state("(s1,t)");
    CHECK(prod.trans(rt)[0].at(s1t) == Rat(3, 10));
    // product of an automaton with a single absorbing state adds one move
    auto solo = ProbAutomaton::parse("absorbing z label zz\n");
    auto prod2 = interleave(a, solo);
    for (int s = 0; s < a.size(); ++s)
        CHECK(prod2.trans(s).size() == a.trans(s).size() + 1);
    // swapping the sides gives the same structure modulo pair order
    auto prod_ba = interleave(c, a);
    CHECK(prod_ba.size() == prod.size());
    int tr = prod_ba.find_state("(t,r)");
    REQUIRE(tr >= 0);
    CHECK(prod_ba.trans(tr).size() == 4);
    // labels are tagged unions
    CHECK(prod.find_prop("top@1") >= 0);
    CHECK(prod.find_prop("tc@2") >= 0);
    // display comments survive a write/parse round trip
    auto reread = ProbAutomaton::parse(prod.to_text());
    CHECK(reread.find_state("(r,t)") >= 0);
}

TEST_CASE("exact LP feasibility") {
    // x + y = 1, x - y = 0 -> x = y = 1/2
    LinFeas lp(2);
    lp.add_eq({Rat(1), Rat(1)}, Rat(1));
    lp.add_eq({Rat(1), Rat(-1)}, Rat(0));
    auto sol = lp.solve();
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(1, 2));
    CHECK((*sol)[1] == Rat(1, 2));

    LinFeas bad(1);
    bad.add_eq({Rat(1)}, Rat(1));
    bad.add_eq({Rat(1)}, Rat(2));
    CHECK_FALSE(bad.feasible());

    LinFeas ge(2);
    ge.add_ge({Rat(1), Rat(0)}, Rat(3));
    ge.add_le({Rat(1), Rat(1)}, Rat(4));
    auto sol2 = ge.solve();
    REQUIRE(sol2.has_value());
    CHECK((*sol2)[0] >= Rat(3));
    CHECK((*sol2)[0] + (*sol2)[1] <= Rat(4));

    // negative rhs rows get flipped internally
    LinFeas neg(1);
    neg.add_le({Rat(-1)}, Rat(-2)); // -x <= -2, x >= 2
    auto sol3 = neg.solve();
    REQUIRE(sol3.has_value());
    CHECK((*sol3)[0] >= Rat(2));
}

TEST_CASE("combined transition matching on fig1") {
    auto a = fixture_automaton("fig1");
    int s = a.find_state("s"), r = a.find_state("r");
    Relation classes = Relation::label_equality(a.label_class_of(), Relation::Kind::equivalence);
    auto cid = classes.class_of();
    int nc = classes.num_classes();
    // the middle transition of r has no combined match at s
    auto mid = a.trans(r)[1].project(cid, nc);
    CHECK_FALSE(can_combine_match(a, s, mid, classes));
    // an existing transition matches itself with weight 1
    auto left = a.trans(s)[0].project(cid, nc);
    CHECK(can_combine_match(a, s, left, classes));
    // the midpoint of left and right is a genuine combination at r
    std::vector<Rat> midpoint(nc);
    auto lproj = a.trans(s)[0].project(cid, nc);
    auto rproj = a.trans(s)[1].project(cid, nc);
    for (int c = 0; c < nc; ++c) midpoint[c] = (lproj[c] + rproj[c]) * Rat(1, 2);
    CHECK(can_combine_match(a, r, midpoint, classes));
    // a state without transitions matches nothing
    auto lonely = ProbAutomaton::parse("state u label top\nstate v label top\ntrans v -> 1:u\n");
    Relation cls2 = Relation::label_equality(lonely.label_class_of(), Relation::Kind::equivalence);
    std::vector<Rat> dirac_target(cls2.num_classes());
    dirac_target[cls2.class_of()[0]] = Rat(1);
    CHECK_FALSE(can_combine_match(lonely, 0, dirac_target, cls2));
}

TEST_CASE("combined matching is monotone in the transition list") {
    auto a = fixture_automaton("fig1");
    Relation classes = Relation::label_equality(a.label_class_of(), Relation::Kind::equivalence);
    auto cid = classes.class_of();
    int nc = classes.num_classes();
    int s = a.find_state("s"), r = a.find_state("r");
    // r's transitions are a superset of s's: anything s matches, r matches
    for (auto& mu : a.trans(s)) {
        auto target = mu.project(cid, nc);
        if (can_combine_match(a, s, target, classes))
            CHECK(can_combine_match(a, r, target, classes));
    }
}

TEST_CASE("branching transition vertices") {
    auto a = fixture_automaton("fig1");
    Relation classes = Relation::label_equality(a.label_class_of(), Relation::Kind::equivalence);
    int s1 = a.find_state("s1");
    // absorbing states only reach their own Dirac (the self-loop stays put)
    auto v = branching_transition_vertices(a, s1, classes, 4);
    REQUIRE(v.size() == 1);
    CHECK(v[0].is_dirac());
    // a transition leaving the class entirely shows up at depth 1
    int s = a.find_state("s");
    auto vs = branching_transition_vertices(a, s, classes, 1);
    CHECK(vs.size() == 3); // dirac + both transitions
    // chain u -> dirac v, v -> mu inside one class surfaces mu at depth 2
    auto chain = ProbAutomaton::parse(R"(pa chain
state u label c
state v label c
absorbing w label d
init u
trans u -> 1:v
trans v -> 1/2:w 1/2:u
)");
    Relation ccls = Relation::label_equality(chain.label_class_of(), Relation::Kind::equivalence);
    auto vu = branching_transition_vertices(chain, chain.find_state("u"), ccls, 2);
    bool has_mu = false;
    for (auto& d : vu)
        if (d.at(chain.find_state("w")) == Rat(1, 2)) has_mu = true;
    CHECK(has_mu);
    // monotone in depth, dirac always included
    auto v1 = branching_transition_vertices(chain, 0, ccls, 1);
    auto v2 = branching_transition_vertices(chain, 0, ccls, 2);
    CHECK(v1.size() <= v2.size());
    for (auto& d : v1) {
        bool found = false;
        for (auto& e : v2)
            if (d == e) found = true;
        CHECK(found);
    }
}

TEST_CASE("downsets enumeration") {
    // discrete order on two states: all four subsets
    Relation discrete(2, Relation::Kind::preorder);
    auto d = downsets(discrete);
    CHECK(d.size() == 4);
    // chain a <= b: empty, {a}, {a,b}
    Relation chain(2, Relation::Kind::preorder);
    chain.set(0, 1);
    auto dc = downsets(chain);
    CHECK(dc.size() == 3);
    bool has_b_alone = false;
    for (auto& s : dc)
        if (s.test(1) && !s.test(0)) has_b_alone = true;
    CHECK_FALSE(has_b_alone);
    // ce44 under label equality: the union {s1,s2} is present
    auto a = fixture_automaton("ce44");
    Relation lbl = Relation::label_equality(a.label_class_of(), Relation::Kind::equivalence);
    auto dl = downsets(lbl);
    StateSet want(a.size());
    want.set(a.find_state("s1"));
    want.set(a.find_state("s2"));
    bool found = false;
    for (auto& s : dl)
        if (s == want) found = true;
    CHECK(found);
    // resource cap reports its name
    Relation big(20, Relation::Kind::preorder);
    CHECK_THROWS_AS(downsets(big, 100), resource_cap_error);
}

TEST_CASE("weight functions certify dirac domination") {
    auto a = ProbAutomaton::parse(R"(pa wf
state u label c
state v label c
absorbing x label d
absorbing y label e
init u
trans u -> 1/2:x 1/2:y
trans v -> 1/2:x 1/2:y
)");
    Relation rel = Relation::label_equality(a.label_class_of(), Relation::Kind::equivalence);
    CHECK(weight_function_combined_feasible(a.trans(0)[0], a.trans(1), rel));
    // under the identity relation only equal distributions transport
    auto b = ProbAutomaton::parse(R"(pa wf2
state u label c
state v label c
absorbing x label d
absorbing y label e
init u
trans u -> 1/2:x 1/2:y
trans v -> 1:x
)");
    Relation ident(b.size(), Relation::Kind::preorder);
    CHECK_FALSE(weight_function_combined_feasible(b.trans(0)[0], b.trans(1), ident));
    CHECK(weight_function_combined_feasible(b.trans(1)[0], {b.trans(1)[0]}, ident));
}
