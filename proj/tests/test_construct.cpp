#include <doctest.h>

#include <cmath>
#include <random>

#include "ed/construct.hpp"
#include "ed/errors.hpp"
#include "ed/point_set.hpp"
#include "ed/verify.hpp"

#include "helpers.hpp"

using ed::WeightedPointSet;

TEST_SUITE("construct") {

TEST_CASE("feasibility recurrence on worked radii") {
    const auto r23 = ed::f_recurrence({2.0, 3.0});
    REQUIRE(r23.feasible);
    REQUIRE(r23.f.size() == 3);
    CHECK(r23.f[0] == doctest::Approx(1.0));
    CHECK(r23.f[1] == doctest::Approx(2.0));
    CHECK(r23.f[2] == doctest::Approx(5.0));
    CHECK(r23.R_next == doctest::Approx(7.0 / 5.0));

    const auto r234 = ed::f_recurrence({2.0, 3.0, 4.0});
    REQUIRE(r234.feasible);
    CHECK(r234.f[3] == doctest::Approx(13.0));
    CHECK(r234.R_next == doctest::Approx(47.0 / 13.0));
}

TEST_CASE("equal radii give closed-form feasibility values") {
    for (int n = 2; n <= 5; ++n) {
        const auto rep = ed::f_recurrence(std::vector<double>(n, double(n)));
        REQUIRE(rep.feasible);
        for (int k = 1; k <= n; ++k)
            CHECK(rep.f[k] == doctest::Approx((n - k + 1) *
                                              std::pow(n + 1.0, k - 1)));
        CHECK(rep.R_next == doctest::Approx(double(n)));
    }
}

TEST_CASE("infeasible radii name the violated condition") {
    const auto rep = ed::f_recurrence({0.5, 0.2});
    CHECK_FALSE(rep.feasible);
    CHECK(rep.violation.find("f_2") != std::string::npos);
    CHECK_THROWS_AS(ed::tight_two_design_from_radii({0.5, 0.2}),
                    ed::InfeasibleError);
}

TEST_CASE("radius-prescribed frame matches the worked example") {
    const auto X = ed::tight_two_design_from_radii({2.0, 3.0});
    REQUIRE(X.size() == 3);
    CHECK(X.points[0][0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(X.points[0][1] == doctest::Approx(0.0));
    CHECK(X.points[1][0] == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(X.points[1][1] == doctest::Approx(std::sqrt(2.5)));
    CHECK(X.points[2][0] == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(X.points[2][1] == doctest::Approx(-3.0 / std::sqrt(10.0)));
    CHECK(X.points[2].squaredNorm() == doctest::Approx(7.0 / 5.0));
    CHECK(X.weights[0] == doctest::Approx(1.0 / 3.0));
    CHECK(X.weights[1] == doctest::Approx(1.0 / 4.0));
    CHECK(X.weights[2] == doctest::Approx(5.0 / 12.0));

    double wsum = 0;
    for (double w : X.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            CHECK(X.points[a].dot(X.points[b]) == doctest::Approx(-1.0));
    CHECK(ed::moment_residuals(X, 2).max_abs_residual < 1e-12);
}

TEST_CASE("unit weight variant keeps the geometry") {
    const auto X = ed::tight_two_design_from_radii({2.0, 3.0}, true);
    for (double w : X.weights) CHECK(w == 1.0);
    CHECK(X.points[0][0] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("random feasible radii always produce mutual negative products") {
    std::mt19937_64 gen(17);
    int built = 0;
    while (built < 25) {
        const int n = 2 + int(helpers::urand(gen) * 4.999);
        std::vector<double> R(n);
        for (double& v : R) v = 0.5 + 4.5 * helpers::urand(gen);
        const auto rep = ed::f_recurrence(R);
        if (!rep.feasible) continue;
        ++built;
        const auto X = ed::tight_two_design_from_radii(R);
        REQUIRE(X.size() == n + 1);
        for (int k = 0; k < n; ++k)
            CHECK(X.points[k].squaredNorm() == doctest::Approx(R[k]));
        for (int a = 0; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                CHECK(X.points[a].dot(X.points[b]) ==
                      doctest::Approx(-1.0).epsilon(1e-11));
        CHECK(ed::moment_residuals(X, 2).max_abs_residual < 1e-9);
    }
}

TEST_CASE("simplex vertices in the plane match the closed form") {
    const auto X = ed::regular_simplex(2);
    CHECK(X.points[0][0] == doctest::Approx(-0.9659258263).epsilon(1e-9));
    CHECK(X.points[0][1] == doctest::Approx(0.2588190451).epsilon(1e-9));
    for (int n = 2; n <= 6; ++n) {
        const auto S = ed::regular_simplex(n);
        REQUIRE(S.size() == n + 1);
        for (int a = 0; a <= n; ++a) {
            CHECK(S.points[a].norm() == doctest::Approx(1.0));
            for (int b = a + 1; b <= n; ++b)
                CHECK(S.points[a].dot(S.points[b]) ==
                      doctest::Approx(-1.0 / n));
        }
    }
}

TEST_CASE("triangle pair family") {
    const auto X = ed::tight_four_design_r2(2);
    REQUIRE(X.size() == 6);
    const auto sh = ed::decompose_shells(X);
    REQUIRE(sh.p() == 2);
    CHECK(sh.radii[1] == doctest::Approx(2.0));
    for (int u = 0; u < 3; ++u) CHECK(X.weights[u] == 1.0);
    for (int u = 3; u < 6; ++u)
        CHECK(X.weights[u] == doctest::Approx(1.0 / 8.0));
    CHECK(ed::moment_residuals(ed::tight_four_design_r2(3), 4)
              .max_abs_residual < 1e-12);
    CHECK_THROWS_AS(ed::tight_four_design_r2(1.0), ed::InfeasibleError);
    CHECK_THROWS_AS(ed::tight_four_design_r2(-2.0), ed::InfeasibleError);
}

TEST_CASE("axis-diagonal family is antipodal with adjacent pairs") {
    const auto X = ed::antipodal_five_design_r2(2);
    REQUIRE(X.size() == 8);
    CHECK(ed::is_antipodal(X));
    for (int k = 0; k < 4; ++k)
        CHECK((X.points[2 * k] + X.points[2 * k + 1]).norm() < 1e-15);
    for (int u = 4; u < 8; ++u)
        CHECK(X.weights[u] == doctest::Approx(1.0 / 16.0));
    CHECK_THROWS_AS(ed::antipodal_five_design_r2(1.0), ed::InfeasibleError);
}

TEST_CASE("low-strength antipodal families") {
    const auto one = ed::bajnok_three_design(1, {1.5});
    REQUIRE(one.size() == 4);
    CHECK(ed::decompose_shells(one).p() == 1);
    CHECK(ed::moment_residuals(one, 3).max_abs_residual < 1e-12);
    for (double w : one.weights) CHECK(w == doctest::Approx(1.0 / 2.25));

    const auto two = ed::bajnok_three_design(2, {1.0, 2.0});
    REQUIRE(two.size() == 4);
    CHECK(ed::decompose_shells(two).p() == 2);
    CHECK(ed::moment_residuals(two, 3).max_abs_residual < 1e-12);
    CHECK_THROWS_AS(ed::bajnok_three_design(2, {1.0, 1.0}),
                    ed::InfeasibleError);
    CHECK_THROWS_AS(ed::bajnok_three_design(3, {1.0, 2.0, 3.0}),
                    ed::InfeasibleError);

    const auto cross = ed::cross_polytope_three_design({1.0, 2.0, 0.5});
    REQUIRE(cross.size() == 6);
    CHECK(ed::moment_residuals(cross, 3).max_abs_residual < 1e-12);
    for (int i = 0; i < 3; ++i) {
        const double r = cross.points[2 * i].norm();
        CHECK(cross.weights[2 * i] == doctest::Approx(1.0 / (3 * r * r)));
    }
}

TEST_CASE("scaling and reweighting preserve strength") {
    const auto base = ed::tight_four_design_r2(2);
    for (double lambda : {0.5, 2.0, 7.0}) {
        for (double mu : {0.5, 2.0, 7.0}) {
            const auto Y =
                ed::reweight_design(ed::scale_design(base, lambda), mu);
            CHECK(ed::moment_residuals(Y, 4).is_design);
        }
    }
    CHECK_THROWS_AS(ed::scale_design(base, 0.0), ed::Error);
    CHECK_THROWS_AS(ed::reweight_design(base, -1.0), ed::Error);
}

} // TEST_SUITE
