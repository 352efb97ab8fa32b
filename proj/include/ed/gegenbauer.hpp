#pragma once

#include <vector>

#include "ed/rational.hpp"

namespace ed {

/// Univariate Gegenbauer polynomial Q_l for dimension n, normalized so that
/// Q_l(1) = dim Harm_l(R^n); in particular Q_0 = 1 and Q_1(y) = n y. This is
/// the normalization under which the sphere addition formula
/// sum_i phi_{l,i}(x) phi_{l,i}(y) = Q_l(<x, y>) holds for unit x, y and an
/// orthonormal harmonic basis.
struct GegenbauerPoly {
    int n = 0;
    int l = 0;
    std::vector<Rational> coeffs; // ascending powers of y

    Rational evaluate_exact(const Rational& y) const;
    double evaluate(double y) const;
};

/// n >= 3: the classical ultraspherical polynomial with parameter (n-2)/2,
/// rescaled to Q_l(1) = h_l. n = 2: the degenerate case Q_0 = 1 and
/// Q_l(cos t) = 2 cos(l t), i.e. twice the Chebyshev polynomial T_l.
GegenbauerPoly gegenbauer(int n, int l);

} // namespace ed
