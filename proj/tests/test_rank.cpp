#include <doctest.h>

#include "ed/construct.hpp"
#include "ed/errors.hpp"
#include "ed/rank.hpp"
#include "ed/system.hpp"

TEST_SUITE("rank") {

TEST_CASE("numerical rank basics") {
    CHECK(ed::matrix_rank(Eigen::MatrixXd::Identity(3, 3)) == 3);
    CHECK(ed::matrix_rank(Eigen::MatrixXd::Zero(4, 6)) == 0);

    Eigen::VectorXd u(3), v(4);
    u << 1, -2, 3;
    v << 2, 0, 1, 5;
    CHECK(ed::matrix_rank(u * v.transpose()) == 1);

    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = 1e-9; // below the relative cutoff 1e-8 * sigma_max
    const auto rep = ed::rank_analysis(D);
    CHECK(rep.rank == 1);
    CHECK(rep.rows == 2);
    CHECK(rep.cols == 2);
    REQUIRE(rep.singular_values.size() == 2);
    CHECK(rep.singular_values[0] == doctest::Approx(1.0));
    CHECK(rep.threshold == doctest::Approx(1e-8));
    CHECK(ed::matrix_rank(D, 1e-10) == 2);
}

TEST_CASE("column selection helpers") {
    Eigen::MatrixXd A(2, 4);
    A << 1, 2, 3, 4, 5, 6, 7, 8;
    const auto B = ed::select_columns(A, {3, 1});
    CHECK(B(0, 0) == 4);
    CHECK(B(1, 1) == 6);
    CHECK_THROWS_AS(ed::select_columns(A, {4}), ed::Error);
    CHECK_THROWS_AS(ed::select_columns(A, {-1}), ed::Error);

    const auto comp = ed::complement_indices(6, {4, 1});
    REQUIRE(comp.size() == 4);
    CHECK(comp == std::vector<int>({0, 2, 3, 5}));
    CHECK_THROWS_AS(ed::complement_indices(3, {3}), ed::Error);
}

TEST_CASE("simplex strength-2 system has a full-rank dependent block") {
    const auto X = ed::regular_simplex(4);
    auto sys = ed::build_design_system(X, 2);
    const auto J = ed::jacobian(sys, ed::pack_variables(X));
    REQUIRE(J.rows() == 13);
    REQUIRE(J.cols() == 25);

    std::vector<int> free_cols;
    for (const char* nm :
         {"x1.2", "x1.3", "x2.3", "x5.1", "x5.2", "x5.3", "x5.4", "w1", "w2",
          "w3", "w4", "w5"})
        free_cols.push_back(ed::variable_index(sys, nm));
    const auto dep = ed::complement_indices(25, free_cols);
    REQUIRE(dep.size() == 13);
    CHECK(ed::matrix_rank(ed::select_columns(J, dep)) == 13);
}

TEST_CASE("two-triangle strength-4 Jacobian rank depends on the radius") {
    for (double r : {3.0, 0.5}) {
        const auto X = ed::tight_four_design_r2(r);
        auto sys = ed::build_design_system(X, 4);
        const auto J = ed::jacobian(sys, ed::pack_variables(X));
        REQUIRE(J.rows() == 12);
        REQUIRE(J.cols() == 18);
        std::vector<int> free_cols;
        for (const char* nm : {"w1", "w2", "w4", "w5"})
            free_cols.push_back(ed::variable_index(sys, nm));
        const auto dep = ed::complement_indices(18, free_cols);
        const int want = (r == 3.0) ? 12 : 11; // rank drops at r = 1/2
        CHECK(ed::matrix_rank(ed::select_columns(J, dep)) == want);
    }
    // The degeneracy is symmetric in r <-> 1/r.
    {
        const auto X = ed::tight_four_design_r2(2.0);
        auto sys = ed::build_design_system(X, 4);
        const auto J = ed::jacobian(sys, ed::pack_variables(X));
        std::vector<int> free_cols;
        for (const char* nm : {"w1", "w2", "w4", "w5"})
            free_cols.push_back(ed::variable_index(sys, nm));
        const auto dep = ed::complement_indices(18, free_cols);
        CHECK(ed::matrix_rank(ed::select_columns(J, dep)) == 11);
    }
}

TEST_CASE("antipodal strength-5 system rank") {
    const auto X = ed::antipodal_five_design_r2(2);
    auto sys = ed::build_design_system(X, 5, true);
    const auto J = ed::jacobian(sys, ed::pack_variables(sys.base));
    REQUIRE(J.rows() == 6);
    REQUIRE(J.cols() == 12);
    std::vector<int> free_cols;
    for (const char* nm : {"x1.1", "x1.2", "x2.1", "x2.2"})
        free_cols.push_back(ed::variable_index(sys, nm));
    const auto dep = ed::complement_indices(12, free_cols);
    REQUIRE(dep.size() == 8);
    CHECK(ed::matrix_rank(ed::select_columns(J, dep)) == 6);
}

TEST_CASE("antipodal cross-polytope strength-3 system rank") {
    const auto X = ed::cross_polytope_three_design({1.0, 1.0});
    auto sys = ed::build_design_system(X, 3, true);
    const auto J = ed::jacobian(sys, ed::pack_variables(sys.base));
    REQUIRE(J.rows() == 2);
    REQUIRE(J.cols() == 6);
    CHECK(ed::matrix_rank(J) == 2);
}

} // TEST_SUITE
