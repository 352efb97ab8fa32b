#pragma once

#include <vector>

#include "ed/point_set.hpp"

namespace ed {

/// Squared norms R_1..R_n prescribed for the first n points of the
/// (n+1)-point tight 2-design family.
using RadiiSpec = std::vector<double>;

/// Feasibility sequence f_0 = 1, f_k = f_{k-1}(R_k + 1) - prod_{i<k}(R_i + 1)
/// (so f_1 = R_1). The radii are feasible iff every f_k > 0 for 1 <= k <= n
/// and f_n < prod_i (R_i + 1); then R_{n+1} = prod_i (R_i + 1) / f_n - 1.
struct FeasibilityReport {
    std::vector<double> f; // f_0..f_n
    bool feasible = false;
    double R_next = 0;     // valid when feasible
    std::string violation; // names the first violated condition
};

FeasibilityReport f_recurrence(const RadiiSpec& R);

/// The (n+1)-point tight Euclidean 2-design with ||x_k||^2 = R_k, all
/// pairwise inner products -1, in the canonical upper-triangular frame
/// (x_k supported on the first k coordinates, diagonal positive). Weights
/// w = 1/(1 + ||x||^2), which sums to 1; unit_weights = true emits w = 1
/// instead for inner-product-set experiments. Throws InfeasibleError with
/// the violated condition for infeasible radii.
WeightedPointSet tight_two_design_from_radii(const RadiiSpec& R,
                                             bool unit_weights = false);

/// n+1 unit vectors with pairwise inner products -1/n, unit weights.
WeightedPointSet regular_simplex(int n);

/// Tight 4-design in R^2: unit equilateral triangle plus the antipodally
/// rotated triangle of radius r, weights 1 and 1/r^3. r = 1 degenerates to a
/// hexagon and is rejected.
WeightedPointSet tight_four_design_r2(double r);

/// Antipodal tight 5-design in R^2: {(+-1,0),(0,+-1)} plus the four diagonal
/// points of radius r, weights 1 and 1/r^4. r = 1 is rejected.
WeightedPointSet antipodal_five_design_r2(double r);

/// Antipodal 3-design in R^2 with p in {1,2} shells of m = 6-2p points each,
/// shell k at angles (2j+k) pi / m with weight 1/r_k^2. Shell radii must be
/// positive and distinct.
WeightedPointSet bajnok_three_design(int p, const std::vector<double>& radii);

/// Antipodal 3-design {+-r_i e_i} in R^n with weights 1/(n r_i^2).
WeightedPointSet cross_polytope_three_design(const std::vector<double>& radii);

/// x -> lambda x keeping weights; preserves design strength.
WeightedPointSet scale_design(const WeightedPointSet& X, double lambda);

/// w -> mu w keeping points; preserves design strength.
WeightedPointSet reweight_design(const WeightedPointSet& X, double mu);

} // namespace ed
