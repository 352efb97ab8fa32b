#include <doctest.h>

#include "ed/moments.hpp"
#include "ed/monomial.hpp"
#include "ed/polynomial.hpp"

using ed::Monomial;
using ed::Rational;
using ed::RationalPoly;

TEST_SUITE("moments") {

TEST_CASE("uniform sphere averages of monomials") {
    CHECK(ed::sphere_monomial_average(Monomial{{0, 0}}, 2) == Rational(1));
    CHECK(ed::sphere_monomial_average(Monomial{{1, 0}}, 2) == Rational(0));
    CHECK(ed::sphere_monomial_average(Monomial{{1, 2}}, 2) == Rational(0));
    CHECK(ed::sphere_monomial_average(Monomial{{3, 1, 1}}, 3) == Rational(0));

    for (int n = 2; n <= 6; ++n) {
        Monomial sq{std::vector<int>(n, 0)};
        sq.exponents[0] = 2;
        CHECK(ed::sphere_monomial_average(sq, n) == Rational(1, n));
    }
    CHECK(ed::sphere_monomial_average(Monomial{{4, 0}}, 2) == Rational(3, 8));
    CHECK(ed::sphere_monomial_average(Monomial{{2, 2}}, 2) == Rational(1, 8));
    CHECK(ed::sphere_monomial_average(Monomial{{4, 0, 0}}, 3) ==
          Rational(1, 5));
    CHECK(ed::sphere_monomial_average(Monomial{{2, 2, 0}}, 3) ==
          Rational(1, 15));
    CHECK(ed::sphere_monomial_average(Monomial{{2, 2, 2}}, 3) ==
          Rational(1, 105));
    CHECK(ed::sphere_monomial_average(Monomial{{6, 0}}, 2) ==
          Rational(5, 16)); // 5!! / (2 * 4 * 6)
}

TEST_CASE("squared coordinates average to one in total") {
    for (int n = 2; n <= 5; ++n) {
        Rational total(0);
        for (int i = 0; i < n; ++i) {
            Monomial sq{std::vector<int>(n, 0)};
            sq.exponents[i] = 2;
            total += ed::sphere_monomial_average(sq, n);
        }
        CHECK(total == Rational(1));
    }
}

TEST_CASE("averages extend linearly to polynomials") {
    const auto x1 = RationalPoly::variable(2, 0);
    const auto x2 = RationalPoly::variable(2, 1);
    CHECK(ed::sphere_average(x1 * x2) == Rational(0));
    CHECK(ed::sphere_average(x1 * x1 - x2 * x2) == Rational(0));
    CHECK(ed::sphere_average(x1 * x1 + x2 * x2) == Rational(1));
    const auto p = (x1 * x1).scaled(Rational(3)) + x2.scaled(Rational(7));
    CHECK(ed::sphere_average(p) == Rational(3, 2));
}

} // TEST_SUITE
