#include "gptcones/lp.hpp"

#include "gptcones/errors.hpp"

#include <algorithm>
#include <cstddef>

namespace gptcones {

namespace {

// Dense simplex tableau.
//   rows 0..m-1 : constraints, column layout [structural | artificial | rhs]
//   row m       : reduced costs, last entry = -objective
struct Tableau {
    int m = 0;
    int n = 0;       // structural columns
    int total = 0;   // structural + artificial
    Mat t;           // (m+1) x (total+1)
    std::vector<int> basis;  // per row, column index of basic variable

    void pivot(int prow, int pcol) {
        Vec& row = t[prow];
        const Rat inv = Rat(1) / row[pcol];
        for (auto& v : row) v *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == prow) continue;
            Rat f = t[i][pcol];
            if (f == 0) continue;
            Vec& r = t[i];
            for (int j = 0; j <= total; ++j) r[j] -= f * row[j];
        }
        basis[prow] = pcol;
    }

    // Bland: entering = smallest column with negative reduced cost among
    // `allowed`, leaving = min ratio with smallest basis index tie-break.
    // Returns optimal(true) / unbounded(false via status flag).
    LpStatus iterate(const std::vector<bool>& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < total; ++j) {
                if (!allowed[j]) continue;
                if (t[m][j] < 0) { enter = j; break; }
            }
            if (enter < 0) return LpStatus::optimal;
            int leave = -1;
            Rat best_ratio = 0;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = t[i][total] / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return LpStatus::unbounded;
            pivot(leave, enter);
        }
    }

    // Recompute the reduced-cost row for cost vector `cost` (size total),
    // given the current basis.
    void set_costs(const Vec& cost) {
        for (int j = 0; j <= total; ++j) t[m][j] = (j < total) ? cost[j] : Rat(0);
        for (int i = 0; i < m; ++i) {
            const Rat cb = cost[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= total; ++j) t[m][j] -= cb * t[i][j];
        }
    }
};

}  // namespace

LpSolution solve_standard_lp(const Mat& a, const Vec& b, const Vec& c) {
    const int m = static_cast<int>(a.size());
    const int n = m > 0 ? static_cast<int>(a[0].size()) : static_cast<int>(c.size());
    LpSolution out;

    Tableau tab;
    tab.m = m;
    tab.n = n;
    tab.total = n + m;
    tab.t.assign(m + 1, Vec(tab.total + 1, Rat(0)));
    tab.basis.resize(m);

    std::vector<int> row_sign(m, 1);
    for (int i = 0; i < m; ++i) {
        const int s = (b[i] < 0) ? -1 : 1;
        row_sign[i] = s;
        for (int j = 0; j < n; ++j) tab.t[i][j] = Rat(s) * a[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.total] = Rat(s) * b[i];
        tab.basis[i] = n + i;
    }

    // Phase 1: minimise the sum of artificials.
    Vec phase1_cost(tab.total, Rat(0));
    for (int i = 0; i < m; ++i) phase1_cost[n + i] = 1;
    tab.set_costs(phase1_cost);
    std::vector<bool> allowed(tab.total, true);
    const LpStatus p1 = tab.iterate(allowed);
    if (p1 != LpStatus::optimal) throw internal_invariant_error("phase-1 simplex cannot be unbounded");

    const Rat phase1_obj = -tab.t[m][tab.total];
    if (phase1_obj > 0) {
        // Infeasible; extract y from reduced costs over artificial columns:
        // rc_j = 1 - y_j for the sign-normalised system, undo row signs.
        out.status = LpStatus::infeasible;
        out.farkas.resize(m);
        for (int i = 0; i < m; ++i) {
            Rat y = Rat(1) - tab.t[m][n + i];
            out.farkas[i] = Rat(row_sign[i]) * y;
        }
        return out;
    }

    // Drive basic artificials (at zero level) out of the basis.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int pcol = -1;
        for (int j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) { pcol = j; break; }
        if (pcol >= 0) tab.pivot(i, pcol);
        // else: redundant row; harmless to keep, artificial stays at 0.
    }

    // Phase 2 on structural columns only.
    Vec cost(tab.total, Rat(0));
    for (int j = 0; j < n && j < static_cast<int>(c.size()); ++j) cost[j] = c[j];
    tab.set_costs(cost);
    for (int i = 0; i < m; ++i) allowed[n + i] = false;
    const LpStatus p2 = tab.iterate(allowed);
    if (p2 == LpStatus::unbounded) {
        out.status = LpStatus::unbounded;
        return out;
    }

    out.status = LpStatus::optimal;
    out.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][tab.total];
    out.objective = 0;
    for (int j = 0; j < n && j < static_cast<int>(c.size()); ++j) out.objective += c[j] * out.x[j];
    return out;
}

FeasibilityResult lp_feasible(const Mat& a, const Vec& b) {
    const Vec zero(a.empty() ? 0 : a[0].size(), Rat(0));
    LpSolution s = solve_standard_lp(a, b, zero);
    FeasibilityResult r;
    if (s.status == LpStatus::optimal) {
        r.feasible = true;
        r.x = std::move(s.x);
    } else {
        r.feasible = false;
        r.farkas = std::move(s.farkas);
    }
    return r;
}

GeneralLpSolution solve_general_lp(const GeneralLp& lp) {
    const int m = static_cast<int>(lp.a.size());
    const int n = m > 0 ? static_cast<int>(lp.a[0].size()) : static_cast<int>(lp.objective.size());
    std::vector<bool> free_var = lp.free_var;
    free_var.resize(n, false);

    // Column layout: for each original variable one column (plus a negated
    // twin if free), then one slack/surplus column per inequality row.
    std::vector<int> pos_col(n), neg_col(n, -1);
    int cols = 0;
    for (int j = 0; j < n; ++j) {
        pos_col[j] = cols++;
        if (free_var[j]) neg_col[j] = cols++;
    }
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (lp.rel[i] != '=') slack_col[i] = cols++;

    Mat a(m, Vec(cols, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][pos_col[j]] = lp.a[i][j];
            if (neg_col[j] >= 0) a[i][neg_col[j]] = -lp.a[i][j];
        }
        if (lp.rel[i] == '<') a[i][slack_col[i]] = 1;
        else if (lp.rel[i] == '>') a[i][slack_col[i]] = -1;
    }

    Vec c(cols, Rat(0));
    for (int j = 0; j < n && j < static_cast<int>(lp.objective.size()); ++j) {
        const Rat cj = lp.maximize ? -lp.objective[j] : lp.objective[j];
        c[pos_col[j]] = cj;
        if (neg_col[j] >= 0) c[neg_col[j]] = -cj;
    }

    LpSolution s = solve_standard_lp(a, lp.b, c);
    GeneralLpSolution out;
    out.status = s.status;
    if (s.status != LpStatus::optimal) return out;
    out.x.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        out.x[j] = s.x[pos_col[j]];
        if (neg_col[j] >= 0) out.x[j] -= s.x[neg_col[j]];
    }
    out.objective = lp.maximize ? -s.objective : s.objective;
    return out;
}

}  // namespace gptcones
