#include <doctest.h>

#include "ed/construct.hpp"
#include "ed/tightness.hpp"

#include "helpers.hpp"

using ed::TightnessReport;

TEST_SUITE("tightness") {

TEST_CASE("simplices and radius families meet the absolute bound") {
    for (int n = 2; n <= 5; ++n) {
        const auto rep = ed::classify_tightness(ed::regular_simplex(n), 2);
        CHECK(rep.classification == "tight-Euclidean");
        CHECK(rep.cardinality == n + 1);
        CHECK(rep.bound == n + 1);
        CHECK(rep.euclidean_bound == n + 1);
    }
    const auto X = ed::tight_two_design_from_radii({2.0, 3.0});
    CHECK(ed::classify_tightness(X, 2).classification == "tight-Euclidean");
}

TEST_CASE("two triangles at distinct radii are tight at strength four") {
    const auto rep = ed::classify_tightness(ed::tight_four_design_r2(2), 4);
    CHECK(rep.classification == "tight-Euclidean");
    CHECK(rep.cardinality == 6);
    CHECK(rep.bound == 6);
}

TEST_CASE("a pentagon is tight only on its sphere") {
    const auto rep = ed::classify_tightness(helpers::regular_polygon(5), 4);
    CHECK(rep.classification == "tight-on-S");
    CHECK(rep.cardinality == 5);
    CHECK(rep.bound == 5);
    CHECK(rep.euclidean_bound == 6);
}

TEST_CASE("a hexagon at strength five is antipodally tight on its sphere") {
    const auto rep = ed::classify_tightness(helpers::regular_polygon(6), 5);
    CHECK(rep.classification == "antipodal-tight-on-S");
    CHECK(rep.cardinality == 3); // representatives
    CHECK(rep.bound == 3);
    CHECK(rep.euclidean_bound == 4);
}

TEST_CASE("the eight-point family is antipodally tight at strength five") {
    for (double r : {0.5, 2.0}) {
        const auto rep =
            ed::classify_tightness(ed::antipodal_five_design_r2(r), 5);
        CHECK(rep.classification == "antipodal-tight-Euclidean");
        CHECK(rep.cardinality == 4);
        CHECK(rep.bound == 4);
        CHECK(rep.euclidean_bound == 4);
    }
}

TEST_CASE("the cross polytope on one shell is antipodally tight at three") {
    const auto rep =
        ed::classify_tightness(ed::cross_polytope_three_design({1.0, 1.0}), 3);
    CHECK(rep.classification == "antipodal-tight-Euclidean");
    CHECK(rep.cardinality == 2);
    CHECK(rep.bound == 2);
    CHECK(rep.euclidean_bound == 2);
}

TEST_CASE("a hexagon at strength four exceeds the bound") {
    const auto rep = ed::classify_tightness(helpers::regular_polygon(6), 4);
    CHECK(rep.classification == "not-tight");
    CHECK(rep.cardinality == 6);
    CHECK(rep.bound == 5);
}

TEST_CASE("odd strength without antipodal symmetry is never tight") {
    const auto rep = ed::classify_tightness(helpers::regular_polygon(5), 3);
    CHECK(rep.classification == "not-tight");
    CHECK(rep.reason.find("antipodal") != std::string::npos);
}

TEST_CASE("non-designs are reported, not classified") {
    auto X = ed::regular_simplex(3);
    X.points[0][0] += 1e-3;
    const auto rep = ed::classify_tightness(X, 2);
    CHECK(rep.classification == "not-tight");
    CHECK_FALSE(rep.strength_report.is_design);
    CHECK(rep.reason.find("not a") != std::string::npos);
}

TEST_CASE("weight spread is reported per shell") {
    const auto rep = ed::classify_tightness(ed::tight_four_design_r2(2), 4);
    CHECK(rep.weight_spread < 1e-14); // equal weights within each shell
}

} // TEST_SUITE
