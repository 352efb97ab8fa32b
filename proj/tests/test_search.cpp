#include <doctest.h>

#include <algorithm>
#include <string>

#include "ed/construct.hpp"
#include "ed/errors.hpp"
#include "ed/search.hpp"
#include "ed/system.hpp"

namespace {

bool lexicographically_sorted(const std::vector<std::vector<int>>& hits) {
    return std::is_sorted(hits.begin(), hits.end());
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("strength-5 full system admits same-shell free sets") {
    const auto X = ed::antipodal_five_design_r2(2);
    auto sys = ed::build_design_system(X, 5);
    ed::SearchOptions opt;
    opt.size = sys.num_variables() - sys.num_equations(); // 24 - 18

    const auto serial = ed::search_free_sets_serial(sys, opt);
    CHECK(serial.candidates_enumerated == 1512);
    CHECK(serial.candidates_tested == 1512);
    CHECK_FALSE(serial.budget_exhausted);
    CHECK(serial.hits.size() == 512);
    CHECK(lexicographically_sorted(serial.hits));
    for (const auto& h : serial.hits) {
        REQUIRE(h.size() == 6);
        CHECK(std::is_sorted(h.begin(), h.end()));
    }

    for (int jobs : {2, 4}) {
        auto par = opt;
        par.jobs = jobs;
        const auto r = ed::search_free_sets(sys, par);
        CHECK(r.hits == serial.hits);
        CHECK(r.candidates_enumerated == serial.candidates_enumerated);
    }
}

TEST_CASE("strength-3 cross-polytope system has no same-shell free set") {
    const auto X = ed::cross_polytope_three_design({1.0, 1.0});
    auto sys = ed::build_design_system(X, 3);
    ed::SearchOptions opt;
    opt.size = sys.num_variables() - sys.num_equations(); // 12 - 8
    const auto r = ed::search_free_sets_serial(sys, opt);
    CHECK(r.candidates_enumerated == 4);
    CHECK(r.hits.empty());
}

TEST_CASE("antipodal strength-3 subsystem has no same-shell free set") {
    const auto X = ed::cross_polytope_three_design({1.0, 1.0});
    auto sys = ed::build_design_system(X, 3, true);
    ed::SearchOptions opt;
    opt.size = sys.num_variables() - sys.num_equations(); // 6 - 2
    const auto r = ed::search_free_sets_serial(sys, opt);
    CHECK(r.candidates_enumerated == 1);
    CHECK(r.hits.empty());
}

TEST_CASE("antipodal-pair constraint finds nothing on the strength-5 system") {
    const auto X = ed::antipodal_five_design_r2(2);
    auto sys = ed::build_design_system(X, 5);
    ed::SearchOptions opt;
    opt.size = 6;
    opt.constraint = ed::PairConstraint::AntipodalPair;
    const auto r = ed::search_free_sets_serial(sys, opt);
    CHECK(r.candidates_enumerated == 760);
    CHECK(r.hits.empty());
}

TEST_CASE("unfiltered enumeration matches between serial and parallel") {
    const auto X = ed::cross_polytope_three_design({1.0, 2.0});
    auto sys = ed::build_design_system(X, 3, true);
    ed::SearchOptions opt;
    opt.size = sys.num_variables() - sys.num_equations();
    opt.constraint = ed::PairConstraint::None;
    const auto serial = ed::search_free_sets_serial(sys, opt);
    CHECK(serial.candidates_enumerated == 15); // C(6,4)
    auto par = opt;
    par.jobs = 3;
    const auto r = ed::search_free_sets(sys, par);
    CHECK(r.hits == serial.hits);
    CHECK(r.candidates_tested == serial.candidates_tested);
}

TEST_CASE("budget caps the number of rank tests") {
    const auto X = ed::antipodal_five_design_r2(2);
    auto sys = ed::build_design_system(X, 5);
    ed::SearchOptions opt;
    opt.size = 6;
    opt.budget = 100;
    const auto r = ed::search_free_sets_serial(sys, opt);
    CHECK(r.budget_exhausted);
    CHECK(r.candidates_tested == 100);
}

TEST_CASE("free-set size must balance the equation count") {
    const auto X = ed::antipodal_five_design_r2(2);
    auto sys = ed::build_design_system(X, 5);
    ed::SearchOptions opt;
    opt.size = 5;
    try {
        ed::search_free_sets_serial(sys, opt);
        FAIL("expected a size mismatch error");
    } catch (const ed::Error& e) {
        CHECK(std::string(e.what()).find("variables minus equations") !=
              std::string::npos);
    }
}

} // TEST_SUITE
