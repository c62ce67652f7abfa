#include "pact/generate.hpp"

#include <map>
#include <stdexcept>

namespace pact {

std::uint64_t SplitMix::next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix::below(std::uint64_t bound) { return next() % bound; }

ProbAutomaton generate_random(const GenParams& params) {
    if (params.states < 1) throw std::invalid_argument("states must be >= 1");
    for (auto& p : params.prob_grid)
        if (p.sign() <= 0 || p > Rat(1))
            throw std::invalid_argument("grid probabilities must lie in (0,1]");
    SplitMix rng(params.seed);
    ProbAutomaton a;
    a.name = "random_" + std::to_string(params.seed);
    for (int s = 0; s < params.states; ++s) {
        a.state_names.push_back("q" + std::to_string(s));
        a.labels.emplace_back();
    }
    a.display_names = a.state_names;
    for (int l = 0; l < params.label_alphabet; ++l) a.props.push_back("l" + std::to_string(l));
    for (int s = 0; s < params.states; ++s)
        a.labels[s] = {static_cast<int>(rng.below(params.label_alphabet))};
    a.transitions.assign(params.states, {});
    for (int s = 0; s < params.states; ++s) {
        int count = 1 + static_cast<int>(rng.below(params.max_transitions));
        std::vector<Distribution> added;
        for (int t = 0; t < count; ++t) {
            std::map<StateId, Rat> acc;
            Rat rem(1);
            while (rem.sign() > 0) {
                Rat p = params.prob_grid[rng.below(params.prob_grid.size())];
                if (p > rem) p = rem;
                StateId target = static_cast<StateId>(rng.below(params.states));
                acc[target] += p;
                rem -= p;
            }
            std::vector<std::pair<StateId, Rat>> entries(acc.begin(), acc.end());
            Distribution d(std::move(entries));
            bool dup = false;
            for (auto& e : added)
                if (e == d) dup = true;
            if (!dup) added.push_back(std::move(d));
        }
        a.transitions[s] = std::move(added);
    }
    a.initial = StateSet(params.states);
    a.initial.set(0);
    return a;
}

} // namespace pact
