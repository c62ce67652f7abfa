#pragma once

#include "pact/automaton.hpp"

namespace pact {

// Interleaving product: states are pairs, each side moves alone while the
// other stays put (Dirac). Proposition names are tagged "@1" / "@2" so the
// product labeling is a plain set again and label equality on pairs equals
// componentwise label equality.
ProbAutomaton interleave(const ProbAutomaton& a, const ProbAutomaton& b);

} // namespace pact
