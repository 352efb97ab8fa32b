#include "ed/moments.hpp"

#include "ed/errors.hpp"

namespace ed {

Rational sphere_monomial_average(const Monomial& alpha, int n) {
    if (n < 1) throw Error("sphere_monomial_average: dimension must be >= 1");
    if (alpha.dimension() != n)
        throw Error("sphere_monomial_average: multi-index dimension mismatch");
    int deg = alpha.degree();
    if (deg == 0) return Rational(1);
    if (!alpha.all_even()) return Rational(0);
    Integer num = 1;
    for (int e : alpha.exponents) num *= double_factorial(e - 1);
    Integer den = 1;
    for (int k = 0; k + 2 <= deg; k += 2) den *= (n + k);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational sphere_average(const RationalPoly& p) {
    Rational acc(0);
    for (const auto& [m, c] : p.terms)
        acc += c * sphere_monomial_average(m, p.n);
    return acc;
}

} // namespace ed
