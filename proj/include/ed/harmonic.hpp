#pragma once

#include <vector>

#include "ed/polynomial.hpp"

namespace ed {

/// Basis of the harmonic polynomials of one homogeneous degree.
/// `exact` carries primitive integer coefficient vectors and is empty after
/// orthonormalization (whose scalings are irrational); `numeric` is the
/// floating view used by evaluation paths and is always populated.
struct HarmonicBasis {
    int n = 0;
    int l = 0;
    std::vector<RationalPoly> exact;
    std::vector<DoublePoly> numeric;
    bool orthonormal = false;

    int size() const { return static_cast<int>(numeric.size()); }
};

/// dim Harm_l(R^n) = C(n+l-1, l) - C(n+l-3, l-2), with h_0 = 1, h_1 = n.
long harm_dim(int n, int l);

/// Exact basis of Harm_l(R^n): the nullspace of the integer Laplacian matrix
/// from degree-l to degree-(l-2) monomial coefficients, reduced over the
/// rationals with grlex-descending columns. Each element is scaled to
/// primitive integer coefficients with positive grlex-leading coefficient,
/// which makes the basis deterministic.
HarmonicBasis harmonic_basis(int n, int l);

/// Cached shared instance of harmonic_basis(n, l) for hot paths.
const HarmonicBasis& harmonic_basis_ref(int n, int l);

/// Sphere inner product (normalized-average convention) of two polynomials,
/// via termwise monomial averages of their product. Exact but quadratic in
/// the term counts.
Rational sphere_inner_product(const RationalPoly& f, const RationalPoly& g);

/// Exact Gram matrix of an equal-degree harmonic family under the sphere
/// inner product, using the apolar pairing: for harmonic f, g of degree l,
/// <f, g> = (sum_alpha alpha! f_alpha g_alpha) / (n (n+2) ... (n+2l-2)).
std::vector<std::vector<Rational>> harmonic_gram(const HarmonicBasis& basis);

/// Gram-Schmidt against the sphere inner product; same span, Gram = identity
/// to 1e-12. Input elements must be linearly independent harmonics of equal
/// degree; rank deficiency raises an error.
HarmonicBasis orthonormalize_sphere(const HarmonicBasis& basis);

/// Cached orthonormal basis.
const HarmonicBasis& orthonormal_basis_ref(int n, int l);

} // namespace ed
