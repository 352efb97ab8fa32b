#pragma once

#include <vector>

namespace ed {

/// Exponent multi-index of a monomial x^alpha in n variables.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    int dimension() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    bool all_even() const;

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

/// Graded lexicographic order: by total degree, then lexicographically on the
/// exponent vector. Gives deterministic term order for every matrix assembly.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of exact total degree d in n variables, grlex-descending
/// (x_1^d first).
std::vector<Monomial> monomials_of_degree(int n, int d);

/// All monomials of total degree <= d, ascending by degree, grlex-descending
/// within a degree.
std::vector<Monomial> monomials_up_to_degree(int n, int d);

} // namespace ed
