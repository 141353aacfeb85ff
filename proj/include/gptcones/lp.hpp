#pragma once

// Exact rational linear programming via a dense two-phase simplex with
// Bland's rule. Sized for desk-scale instances (tens of rows/columns).
// Infeasibility comes with a Farkas certificate, which is what the cone
// membership oracles turn into separating functionals.

#include "gptcones/linalg.hpp"

#include <optional>

namespace gptcones {

enum class LpStatus { optimal, infeasible, unbounded };

// min c.x  subject to  A x = b, x >= 0.
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Vec x;          // primal solution when optimal
    Rat objective;  // c.x when optimal
    // When infeasible: y with y.A <= 0 componentwise and y.b > 0, so that
    // -y separates b from the column cone.
    Vec farkas;
};

LpSolution solve_standard_lp(const Mat& a, const Vec& b, const Vec& c);

// Feasibility of A x = b, x >= 0 (phase 1 only).
struct FeasibilityResult {
    bool feasible = false;
    Vec x;
    Vec farkas;  // as in LpSolution when infeasible
};

FeasibilityResult lp_feasible(const Mat& a, const Vec& b);

// General-form problem: min or max obj.x with per-row relations and
// optionally free variables. Translated to standard form internally.
struct GeneralLp {
    Mat a;
    Vec b;
    std::vector<char> rel;  // '<', '>', '=' per row (<= / >= / ==)
    Vec objective;
    bool maximize = false;
    std::vector<bool> free_var;  // per column; default all false (x >= 0)
};

struct GeneralLpSolution {
    LpStatus status = LpStatus::infeasible;
    Vec x;  // original variables
    Rat objective;
};

GeneralLpSolution solve_general_lp(const GeneralLp& lp);

}  // namespace gptcones
