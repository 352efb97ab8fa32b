#pragma once

#include <vector>

#include "ed/point_set.hpp"

namespace ed {

/// Result of the moment-criterion check: one residual
/// sum_u w(u) ||u||^{2j} phi_{l,i}(u) per harmonic basis element phi_{l,i},
/// 1 <= l <= t, 0 <= j <= floor((t-l)/2).
struct StrengthReport {
    struct Entry {
        int l = 0;
        int j = 0;
        int i = 0; // basis element index within degree l
        double value = 0;
    };

    int strength = 0;
    std::vector<Entry> residuals; // l ascending, then j, then i
    double max_abs_residual = 0;
    double tolerance = 1e-9;
    bool is_design = false;
};

/// Number of moment equations for strength t in dimension n:
/// sum_{l=1}^{t} (floor((t-l)/2) + 1) h_l.
long moment_equation_count(int n, int t);

/// Evaluates every moment equation with the exact-coefficient harmonic bases
/// (orthonormality is irrelevant for zero sums).
StrengthReport moment_residuals(const WeightedPointSet& X, int t,
                                double tol = 1e-9);

/// Independent verification route: compares the weighted point sum of every
/// monomial of degree <= t against the shell-integral side
/// sum_i w(S_i) r_i^{deg} avg_{S^{n-1}}(x^alpha); a zero-radius shell
/// contributes the monomial's value at the origin. Returns the maximum
/// absolute discrepancy.
double verify_design_integral(const WeightedPointSet& X, int t,
                              double group_tol = 1e-8);

} // namespace ed
