#include "pact/compose.hpp"

#include <algorithm>

namespace pact {

ProbAutomaton interleave(const ProbAutomaton& a, const ProbAutomaton& b) {
    ProbAutomaton out;
    out.name = a.name + "_x_" + b.name;
    const int nb = b.size();
    auto pid = [nb](int i, int j) { return i * nb + j; };

    for (auto& p : a.props) out.props.push_back(p + "@1");
    const int boff = static_cast<int>(out.props.size());
    for (auto& p : b.props) out.props.push_back(p + "@2");

    out.state_names.reserve(a.size() * nb);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < nb; ++j) {
            out.state_names.push_back(a.state_names[i] + "__" + b.state_names[j]);
            out.display_names.push_back("(" + a.display_names[i] + "," + b.display_names[j] + ")");
            std::vector<int> lbl = a.labels[i];
            for (int q : b.labels[j]) lbl.push_back(boff + q);
            std::sort(lbl.begin(), lbl.end());
            out.labels.push_back(std::move(lbl));
        }

    out.transitions.assign(out.state_names.size(), {});
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < nb; ++j) {
            auto& tl = out.transitions[pid(i, j)];
            for (auto& mu : a.trans(i)) {
                std::vector<std::pair<StateId, Rat>> e;
                for (auto& [t, p] : mu.entries()) e.emplace_back(pid(t, j), p);
                tl.push_back(Distribution(std::move(e)));
            }
            for (auto& nu : b.trans(j)) {
                std::vector<std::pair<StateId, Rat>> e;
                for (auto& [t, p] : nu.entries()) e.emplace_back(pid(i, t), p);
                tl.push_back(Distribution(std::move(e)));
            }
        }

    out.initial = StateSet(out.size());
    for (int i : a.initial.members())
        for (int j : b.initial.members()) out.initial.set(pid(i, j));
    return out;
}

} // namespace pact
