#pragma once

#include "pact/rational.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pact {

enum class Cmp { lt, le, ge, gt };

std::string cmp_str(Cmp c);
bool cmp_holds(const Rat& value, Cmp c, const Rat& bound);

struct PathFormula;
struct StateFormula;
using StateRef = std::shared_ptr<const StateFormula>;
using PathRef = std::shared_ptr<const PathFormula>;

struct StateFormula {
    enum class Kind { tt, ff, atom, not_, and_, or_, prob };
    Kind kind;
    std::string atom;   // atom
    StateRef lhs, rhs;  // not_: lhs only
    Cmp cmp = Cmp::ge;  // prob
    Rat bound;          // prob, in [0,1]
    PathRef path;       // prob
};

struct PathFormula {
    enum class Kind { state, not_, and_, or_, next, until, buntil };
    Kind kind;
    StateRef state;  // state
    PathRef lhs, rhs;
    int bound = 0;  // buntil
};

StateRef s_true();
StateRef s_false();
StateRef s_atom(std::string name);
StateRef s_not(StateRef f);
StateRef s_and(StateRef a, StateRef b);
StateRef s_or(StateRef a, StateRef b);
StateRef s_prob(Cmp c, Rat bound, PathRef p);

// constant-folding constructors (true/false absorption, double negation)
StateRef s_and_s(StateRef a, StateRef b);
StateRef s_or_s(StateRef a, StateRef b);
StateRef s_not_s(StateRef a);

PathRef p_state(StateRef f);
PathRef p_not(PathRef f);
PathRef p_and(PathRef a, PathRef b);
PathRef p_or(PathRef a, PathRef b);
PathRef p_next(PathRef f);
PathRef p_until(PathRef a, PathRef b);
PathRef p_buntil(PathRef a, int n, PathRef b);

std::string str(const StateRef& f);
std::string str(const PathRef& f);

// Textual grammar (see README): atoms, !, &, |, P{<,<=,>=,>}q [ path ],
// path operators X, U, U<=n; `!` binds tightest, then X, then U, then &, |.
StateFormula parse_formula_tree(const std::string& text);
StateRef parse_formula(const std::string& text);
PathRef parse_path_formula(const std::string& text);

// Maximum number of nested X operators; only defined for U-free formulae.
int depth(const PathRef& psi);

// ---- fragments ----
enum class Fragment {
    pctl,
    pctl_minus,
    pctl_minus_i,
    pctl_star,
    pctl_star_minus,
    pctl_star_minus_i,
    pctl_no_x,
    pctl_star_no_x,
    pctl_safe,
    pctl_star_safe,
};

struct FragmentTag {
    Fragment frag;
    std::optional<int> index; // for the _i fragments: the least admissible i
    bool operator<(const FragmentTag& o) const {
        if (frag != o.frag) return frag < o.frag;
        return index < o.index;
    }
    std::string str() const;
};

// Every tag the formula satisfies; recomputed from the tree, never trusted.
std::set<FragmentTag> classify(const StateRef& f);
bool has_tag(const std::set<FragmentTag>& tags, Fragment f);

// Rewrites a formula whose path subformulae are U-free of depth <= 1 into
// PCTL^-_1 shape using the three expressiveness identities plus !X = X!.
StateRef normalize_depth1(const StateRef& f);

} // namespace pact
