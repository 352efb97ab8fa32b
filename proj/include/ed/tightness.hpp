#pragma once

#include <string>

#include "ed/point_set.hpp"
#include "ed/verify.hpp"

namespace ed {

/// Tightness classification of a verified design. For even t = 2e the
/// cardinality |X| is compared with dim Pol_e(S) and dim Pol_e(R^n); for odd
/// t = 2e+1 the set must be antipodal with symmetric weights and |X*| is
/// compared with the star-space dimensions. weight_spread reports the
/// largest within-shell weight variation (tight designs have shell-constant
/// weights).
struct TightnessReport {
    int strength = 0;
    long cardinality = 0;      // |X| for even t, |X*| for odd t
    long bound = 0;            // dim Pol_e(S) or dim Pol_e*(S)
    long euclidean_bound = 0;  // same over R^n
    std::string classification; // tight-on-S | tight-Euclidean |
                                // antipodal-tight-on-S |
                                // antipodal-tight-Euclidean | not-tight
    double weight_spread = 0;
    std::string reason; // set when not-tight for a structural reason
    StrengthReport strength_report;
};

TightnessReport classify_tightness(const WeightedPointSet& X, int t,
                                   double tol = 1e-9,
                                   double group_tol = 1e-8);

} // namespace ed
