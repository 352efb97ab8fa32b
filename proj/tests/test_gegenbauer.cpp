#include <doctest.h>

#include <cmath>
#include <random>

#include "ed/gegenbauer.hpp"
#include "ed/harmonic.hpp"

#include "helpers.hpp"

using ed::Rational;

TEST_SUITE("gegenbauer") {

TEST_CASE("value at one equals the component dimension") {
    for (int n = 2; n <= 6; ++n)
        for (int l = 0; l <= 8; ++l)
            CHECK(ed::gegenbauer(n, l).evaluate_exact(Rational(1)) ==
                  Rational(ed::harm_dim(n, l)));
}

TEST_CASE("degree zero and one are constants and scaled identity") {
    for (int n = 2; n <= 5; ++n) {
        const auto q0 = ed::gegenbauer(n, 0);
        REQUIRE(q0.coeffs.size() == 1);
        CHECK(q0.coeffs[0] == Rational(1));
        const auto q1 = ed::gegenbauer(n, 1);
        REQUIRE(q1.coeffs.size() == 2);
        CHECK(q1.coeffs[0] == Rational(0));
        CHECK(q1.coeffs[1] == Rational(n));
    }
}

TEST_CASE("plane kernels are doubled Chebyshev polynomials") {
    const auto q2 = ed::gegenbauer(2, 2); // 2(2y^2 - 1)
    REQUIRE(q2.coeffs.size() == 3);
    CHECK(q2.coeffs[0] == Rational(-2));
    CHECK(q2.coeffs[1] == Rational(0));
    CHECK(q2.coeffs[2] == Rational(4));

    const auto q3 = ed::gegenbauer(2, 3); // 2(4y^3 - 3y)
    REQUIRE(q3.coeffs.size() == 4);
    CHECK(q3.coeffs[1] == Rational(-6));
    CHECK(q3.coeffs[3] == Rational(8));
}

TEST_CASE("dimension three gives rescaled Legendre polynomials") {
    const auto q2 = ed::gegenbauer(3, 2); // 5 (3y^2 - 1)/2
    REQUIRE(q2.coeffs.size() == 3);
    CHECK(q2.coeffs[0] == Rational(-5, 2));
    CHECK(q2.coeffs[2] == Rational(15, 2));
}

TEST_CASE("dimension four gives rescaled second-kind Chebyshev") {
    const auto q2 = ed::gegenbauer(4, 2); // 3 (4y^2 - 1)
    REQUIRE(q2.coeffs.size() == 3);
    CHECK(q2.coeffs[0] == Rational(-3));
    CHECK(q2.coeffs[2] == Rational(12));
}

TEST_CASE("double evaluation matches the exact path") {
    std::mt19937_64 gen(11);
    for (int n = 2; n <= 5; ++n) {
        for (int l = 0; l <= 6; ++l) {
            const auto q = ed::gegenbauer(n, l);
            for (int trial = 0; trial < 20; ++trial) {
                const double y = 2 * helpers::urand(gen) - 1;
                Rational yr(static_cast<long>(std::lround(y * 1024)), 1024);
                yr.canonicalize();
                CHECK(std::abs(q.evaluate(ed::to_double(yr)) -
                               ed::to_double(q.evaluate_exact(yr))) < 1e-10);
            }
        }
    }
}

TEST_CASE("reproducing property against the orthonormal basis") {
    // sum_i phi_i(u) phi_i(v) = Q_l(<u,v>) for unit vectors.
    for (int l = 1; l <= 4; ++l) {
        const auto& ob = ed::orthonormal_basis_ref(2, l);
        const auto q = ed::gegenbauer(2, l);
        for (double a : {0.3, 1.1, 2.0}) {
            for (double b : {0.0, 0.7, 2.5}) {
                const Eigen::Vector2d u(std::cos(a), std::sin(a));
                const Eigen::Vector2d v(std::cos(b), std::sin(b));
                double lhs = 0;
                for (const auto& phi : ob.numeric)
                    lhs += phi.evaluate(std::vector<double>{u[0], u[1]}) *
                           phi.evaluate(std::vector<double>{v[0], v[1]});
                CHECK(std::abs(lhs - q.evaluate(u.dot(v))) < 1e-12);
            }
        }
    }
}

} // TEST_SUITE
