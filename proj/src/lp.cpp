#include "pact/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace pact {

void LinFeas::add_row(std::vector<Rat> coeffs, char op, Rat rhs) {
    if (static_cast<int>(coeffs.size()) != n_)
        throw std::invalid_argument("row width mismatch");
    rows_.push_back({std::move(coeffs), op, std::move(rhs)});
}

std::optional<std::vector<Rat>> LinFeas::solve() const {
    const int m = static_cast<int>(rows_.size());
    // columns: n_ original, then one slack/surplus per inequality row,
    // then one artificial per row, then the rhs
    int num_slack = 0;
    for (auto& r : rows_)
        if (r.op != '=') ++num_slack;
    const int ncols = n_ + num_slack + m;

    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(ncols + 1));
    int slack_at = n_;
    for (int i = 0; i < m; ++i) {
        const Row& r = rows_[i];
        bool flip = r.rhs.sign() < 0;
        for (int j = 0; j < n_; ++j) t[i][j] = flip ? -r.a[j] : r.a[j];
        t[i][ncols] = flip ? -r.rhs : r.rhs;
        if (r.op != '=') {
            char op = r.op;
            if (flip) op = (op == '<') ? '>' : '<';
            t[i][slack_at++] = (op == '<') ? Rat(1) : Rat(-1);
        }
        t[i][n_ + num_slack + i] = Rat(1); // artificial
    }

    // objective: minimize sum of artificials; reduced-cost row starts as
    // -(sum of all constraint rows) on non-artificial columns
    std::vector<Rat> red(ncols + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= ncols; ++j)
            if (j < n_ + num_slack || j == ncols) red[j] -= t[i][j];

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n_ + num_slack + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < ncols; ++j)
            if (red[j].sign() < 0) { enter = j; break; } // Bland: lowest index
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rat ratio = t[i][ncols] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0)
            break; // unbounded direction for the phase-1 objective cannot happen; stop defensively
        // pivot
        Rat piv = t[leave][enter];
        for (int j = 0; j <= ncols; ++j) t[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (!red[enter].is_zero()) {
            Rat f = red[enter];
            for (int j = 0; j <= ncols; ++j) red[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // objective value = -(red rhs); feasible iff all artificials are zero
    Rat obj = -red[ncols];
    if (!obj.is_zero()) return std::nullopt;
    // an artificial can linger in the basis at value 0; that is still feasible
    std::vector<Rat> x(n_);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n_) x[basis[i]] = t[i][ncols];
    return x;
}

} // namespace pact
