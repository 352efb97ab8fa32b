#pragma once

#include <Eigen/Dense>
#include <vector>

namespace ed {

/// Finite weighted point set (X, w) in R^n. Weights are strictly positive
/// and points pairwise distinct within 1e-12.
struct WeightedPointSet {
    int n = 0;
    std::vector<Eigen::VectorXd> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

/// Throws on dimension mismatches, non-positive weights, or coincident
/// points (max-coordinate distance below 1e-12).
void validate(const WeightedPointSet& X);

/// Decomposition of X into concentric spherical shells.
struct ShellDecomposition {
    std::vector<double> radii;        // ascending
    std::vector<int> membership;      // point index -> shell index
    int epsilon_S = 0;                // 1 iff a shell has radius ~0
    std::vector<double> shell_weights; // total weight per shell

    int p() const { return static_cast<int>(radii.size()); }
};

/// Groups point norms into maximal clusters of pairwise gap < group_tol.
/// A cluster whose diameter reaches group_tol means two candidate radii are
/// too close to separate; that ambiguity is an error, not a guess.
ShellDecomposition decompose_shells(const WeightedPointSet& X,
                                    double group_tol = 1e-8);

/// True iff every point has its negation present with matching weight
/// (|w(x) - w(-x)| <= tol); a point at the origin is self-paired.
bool is_antipodal(const WeightedPointSet& X, double tol = 1e-9);

/// One representative per antipodal pair (keeping first-occurrence order and
/// the representative's weight); the origin, if present, is kept once.
/// Errors on non-antipodal input.
WeightedPointSet antipodal_half(const WeightedPointSet& X, double tol = 1e-9);

/// Distinct values among the pairwise inner products <x, y>, x != y,
/// clustered within tol. e is the cluster count; the cardinality bound
/// |X| <= C(n+e, e) for e-inner-product sets is checked alongside.
struct InnerProductProfile {
    std::vector<double> values; // ascending cluster representatives
    int e = 0;
    long cardinality_bound = 0;
    bool bound_satisfied = true;
};

InnerProductProfile inner_product_set_profile(const WeightedPointSet& X,
                                              double tol = 1e-9);

} // namespace ed
