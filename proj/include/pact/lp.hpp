#pragma once

#include "pact/rational.hpp"

#include <optional>
#include <vector>

namespace pact {

// Exact rational linear feasibility: find x >= 0 with each row satisfying
// sum_j a[j]*x[j] (op) rhs, op in {'=', '<', '>'} meaning =, <=, >=.
// Solved by phase-1 simplex with Bland's rule; no tolerances anywhere.
class LinFeas {
public:
    explicit LinFeas(int num_vars) : n_(num_vars) {}

    void add_row(std::vector<Rat> coeffs, char op, Rat rhs);
    void add_eq(std::vector<Rat> coeffs, Rat rhs) { add_row(std::move(coeffs), '=', std::move(rhs)); }
    void add_le(std::vector<Rat> coeffs, Rat rhs) { add_row(std::move(coeffs), '<', std::move(rhs)); }
    void add_ge(std::vector<Rat> coeffs, Rat rhs) { add_row(std::move(coeffs), '>', std::move(rhs)); }

    // Feasible point (length num_vars) or nullopt.
    std::optional<std::vector<Rat>> solve() const;
    bool feasible() const { return solve().has_value(); }

private:
    int n_;
    struct Row {
        std::vector<Rat> a;
        char op;
        Rat rhs;
    };
    std::vector<Row> rows_;
};

} // namespace pact
