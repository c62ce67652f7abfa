#include "pact/fixtures.hpp"

#include "pact/compose.hpp"

#include <stdexcept>

namespace pact {

namespace {

// Two states s and r over shared absorbing successors; r carries the extra
// middle transition that no combination of s's transitions reproduces.
const char* FIG1 = R"(pa fig1
# L(s) = L(r) = top, the successors carry distinct atoms
state s label top
state r label top
absorbing s1 label a1
absorbing s2 label a2
absorbing s3 label a3
init s
init r
trans s -> 3/10:s1 3/10:s2 2/5:s3
trans s -> 1/2:s1 2/5:s2 1/10:s3
trans r -> 3/10:s1 3/10:s2 2/5:s3
trans r -> 2/5:s1 3/10:s2 3/10:s3
trans r -> 1/2:s1 2/5:s2 1/10:s3
)";

// Left automaton of the same picture alone (four states).
const char* FIG1_LEFT = R"(pa fig1_left
state s label top
absorbing s1 label a1
absorbing s2 label a2
absorbing s3 label a3
init s
trans s -> 3/10:s1 3/10:s2 2/5:s3
trans s -> 1/2:s1 2/5:s2 1/10:s3
)";

// fig1 with the successors continuing: s1 keeps most of its mass, s2 leaves
// immediately, s3 splits evenly; s4 absorbs everything.
const char* EX35 = R"(pa ex35
state s label top
state r label top
state s1 label a1
state s2 label a2
state s3 label a3
absorbing s4 label a4
init s
init r
trans s -> 3/10:s1 3/10:s2 2/5:s3
trans s -> 1/2:s1 2/5:s2 1/10:s3
trans r -> 3/10:s1 3/10:s2 2/5:s3
trans r -> 2/5:s1 3/10:s2 3/10:s3
trans r -> 1/2:s1 2/5:s2 1/10:s3
trans s1 -> 3/5:s1 2/5:s4
trans s2 -> 1:s4
trans s3 -> 1/2:s3 1/2:s4
)";

// fig1 with s1 and s3 feeding the same two absorbing sinks.
const char* EX51 = R"(pa ex51
state s label top
state r label top
state s1 label a1
absorbing s2 label a2
state s3 label a3
absorbing s4 label a4
absorbing s5 label a5
init s
init r
trans s -> 3/10:s1 3/10:s2 2/5:s3
trans s -> 1/2:s1 2/5:s2 1/10:s3
trans r -> 3/10:s1 3/10:s2 2/5:s3
trans r -> 2/5:s1 3/10:s2 3/10:s3
trans r -> 1/2:s1 2/5:s2 1/10:s3
trans s1 -> 2/5:s4 3/5:s5
trans s3 -> 2/5:s4 3/5:s5
)";

// Four absorbing targets split across two transitions each; only non-singleton
// downward-closed sets can tell s and r apart.
const char* CE44 = R"(pa ce44
state s label top
state r label top
absorbing s1 label a1
absorbing s2 label a2
absorbing s3 label a3
absorbing s4 label a4
init s
init r
trans s -> 1/2:s1 1/2:s2
trans s -> 1/2:s3 1/2:s4
trans r -> 1/2:s1 1/2:s3
trans r -> 1/2:s2 1/2:s4
)";

// The biased coin the non-congruence scenarios compose with.
const char* COIN = R"(pa coin
state t label tc
absorbing t1 label t_1
absorbing t2 label t_2
init t
trans t -> 2/5:t1 3/5:t2
)";

std::vector<Fixture> make_corpus() {
    return {
        {"fig1", FIG1},           {"fig1_left", FIG1_LEFT}, {"ex35", EX35},
        {"ex51", EX51},           {"ce44", CE44},           {"coin", COIN},
    };
}

} // namespace

const std::vector<Fixture>& fixture_corpus() {
    static const std::vector<Fixture> corpus = make_corpus();
    return corpus;
}

const Fixture& fixture(const std::string& name) {
    for (auto& f : fixture_corpus())
        if (f.name == name) return f;
    throw std::invalid_argument("no fixture named '" + name + "'");
}

ProbAutomaton fixture_automaton(const std::string& name) {
    return ProbAutomaton::parse(fixture(name).model_text);
}

ProbAutomaton fig1_coin_product() {
    return interleave(fixture_automaton("fig1"), fixture_automaton("coin"));
}

ProbAutomaton ex51_coin_product() {
    return interleave(fixture_automaton("ex51"), fixture_automaton("coin"));
}

} // namespace pact
