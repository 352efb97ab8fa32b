#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <vector>

#include "ed/point_set.hpp"

namespace ed {

/// Power moments a_m = sum_x w(x) ||x||^{2m}, m = 0..max_m.
std::vector<double> radial_moments(const WeightedPointSet& X, int max_m);

/// The orthonormal radial family g_{l,0..count-1} for one harmonic degree l:
/// polynomials in s = ||x||^2, orthonormal under
/// <f, g>_l = sum_x w(x) ||x||^{2l} f g. Row j holds the coefficients of
/// g_{l,j} by ascending power of s; g_{l,0} = 1/sqrt(a_l).
struct RadialFunctions {
    int l = 0;
    std::vector<std::vector<double>> coeffs;

    double evaluate(int j, double s) const;
    int count() const { return static_cast<int>(coeffs.size()); }
};

/// Gram-Schmidt of {1, s, s^2, ...} against <.,.>_l; the Gram matrix is the
/// Hankel matrix of a_{l+j+k}. Errors when the Gram matrix is singular
/// (fewer distinct weighted radii than requested functions).
RadialFunctions weighted_gram_schmidt(const WeightedPointSet& X, int l,
                                      int count);

/// The (l, j) index blocks of the natural basis of Pol_e(S) (or of the star
/// space when star is set): l = 0 carries j <= min(p-1, e/2), l >= 1 carries
/// j <= min(p - eps_S - 1, (e-l)/2); star keeps only l with the parity of e.
struct HBlock {
    int l = 0;
    int jmax = 0;
};
std::vector<HBlock> h_blocks(int e, int p, int epsilon_S, bool star);

/// Pointwise tight-design identities. diagonal_residual is
/// max_u |sum_l Q_l(1) ||u||^{2l} sum_j g_{l,j}(u)^2 + sum_j g_{0,j}(u)^2
///        - 1/w(u)|
/// and offdiagonal_residual the same double sum at pairs u != v with
/// Q_l evaluated at the angle cosine, which must vanish. star = true checks
/// the antipodal half set with doubled weights against even degrees only;
/// points at the origin contribute nothing in degrees l >= 1.
struct TightIdentityResult {
    double diagonal_residual = 0;
    double offdiagonal_residual = 0;
};
TightIdentityResult tight_identity_check(const WeightedPointSet& X, int e,
                                         bool star = false,
                                         double group_tol = 1e-8);

/// The matrix M(u, g_{l,j} phi_{l,i}) = sqrt(w(u)) g_{l,j}(u) phi_{l,i}(u)
/// over the h_blocks columns, with sphere-orthonormal phi. For any 2e-design
/// on its shells t(M)M = I; M t(M) = I can hold only when M is square (the
/// tight case), and mmt_residual reports its defect either way.
struct DesignMatrixReport {
    Eigen::MatrixXd M;
    std::vector<std::tuple<int, int, int>> columns; // (l, j, i)
    bool square = false;
    double tmm_residual = 0;
    double mmt_residual = 0;
};
DesignMatrixReport design_matrix_M(const WeightedPointSet& X, int e,
                                   bool star = false, double group_tol = 1e-8);

} // namespace ed
