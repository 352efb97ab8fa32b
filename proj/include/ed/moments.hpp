#pragma once

#include "ed/monomial.hpp"
#include "ed/polynomial.hpp"
#include "ed/rational.hpp"

namespace ed {

/// Average of x^alpha over the unit sphere S^{n-1} under the normalized
/// rotation-invariant measure. Zero when any exponent is odd; otherwise
/// prod_i (alpha_i - 1)!! / (n (n+2) ... (n + |alpha| - 2)).
Rational sphere_monomial_average(const Monomial& alpha, int n);

/// Average of a polynomial over the unit sphere, term by term.
Rational sphere_average(const RationalPoly& p);

} // namespace ed
