#pragma once

#include <vector>

#include "ed/system.hpp"

namespace ed {

/// Structural filter on candidate free sets. A qualifying pair is a pair of
/// base points on a common shell; the candidate must contain every
/// coordinate variable of both points of at least one such pair.
enum class PairConstraint {
    None,                  // no filter, enumerate all subsets
    SameShellNonAntipodal, // pair must not be antipodal
    AntipodalPair,         // pair must be antipodal
};

struct SearchOptions {
    int size = 0; // |free set|; must equal num_variables - num_equations
    PairConstraint constraint = PairConstraint::SameShellNonAntipodal;
    long budget = 1000000; // maximum number of rank tests
    double rank_tol = 1e-8;
    double group_tol = 1e-8; // shell clustering tolerance for the filter
    int jobs = 1;            // parallel worker count; 0 = hardware default
};

struct SearchResult {
    // Free sets whose complement columns have full row rank, each ascending,
    // listed in lexicographic order of the subset.
    std::vector<std::vector<int>> hits;
    long candidates_enumerated = 0; // subsets passing the structural filter
    long candidates_tested = 0;     // rank tests performed
    bool budget_exhausted = false;
    double seconds = 0;
};

/// Enumerate free sets I' with |I'| = |I| - K whose complementary Jacobian
/// columns (at the base configuration) have rank K. Serial reference and
/// parallel implementation produce identical results when the budget is not
/// exhausted.
SearchResult search_free_sets(const DesignSystem& sys,
                              const SearchOptions& opt);
SearchResult search_free_sets_serial(const DesignSystem& sys,
                                     const SearchOptions& opt);

} // namespace ed
