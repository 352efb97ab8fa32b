#pragma once

namespace ed {

/// Full: all polynomials of degree <= e. EvenOnly: the subspace spanned by
/// monomials whose degree has the same parity as e (the star spaces used for
/// antipodal designs).
enum class Parity { Full, EvenOnly };

/// dim Pol_e(R^n) = C(n+e, e).
long pol_dim_full_space(int n, int e);

/// dim Pol_e*(R^n) = sum_{i=0}^{floor(e/2)} C(n+e-2i-1, n-1).
long pol_dim_star_space(int n, int e);

/// Dimension of the restriction of Pol_e (or its star subspace) to a union S
/// of p concentric spheres, epsilon_S flagging a zero-radius shell. Both
/// closed-form branches: the truncated sums when p is small relative to e,
/// and the full-space dimension once p exceeds the cutoff.
long design_dimension_bound(int n, int e, int p, int epsilon_S, Parity parity);

} // namespace ed
