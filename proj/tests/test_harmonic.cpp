#include <doctest.h>

#include <cmath>

#include "ed/harmonic.hpp"
#include "ed/moments.hpp"
#include "ed/rational.hpp"

using ed::HarmonicBasis;
using ed::Monomial;
using ed::Rational;
using ed::RationalPoly;

namespace {

// Numeric sphere inner product of orthonormalized (double) elements.
double numeric_sphere_ip(const ed::DoublePoly& f, const ed::DoublePoly& g) {
    double acc = 0;
    for (const auto& [ma, ca] : f.terms) {
        for (const auto& [mb, cb] : g.terms) {
            Monomial prod = ma;
            for (size_t i = 0; i < prod.exponents.size(); ++i)
                prod.exponents[i] += mb.exponents[i];
            acc += ca * cb *
                   ed::to_double(ed::sphere_monomial_average(
                       prod, static_cast<int>(prod.exponents.size())));
        }
    }
    return acc;
}

RationalPoly var(int n, int i) { return RationalPoly::variable(n, i); }

} // namespace

TEST_SUITE("harmonic") {

TEST_CASE("component dimensions match the closed form") {
    CHECK(ed::harm_dim(2, 0) == 1);
    CHECK(ed::harm_dim(2, 1) == 2);
    for (int l = 1; l <= 8; ++l) CHECK(ed::harm_dim(2, l) == 2);
    CHECK(ed::harm_dim(3, 2) == 5);
    CHECK(ed::harm_dim(4, 2) == 9);
    CHECK(ed::harm_dim(5, 3) == 30);
    for (int n = 2; n <= 4; ++n)
        for (int l = 0; l <= 4; ++l)
            CHECK(static_cast<int>(ed::harmonic_basis(n, l).exact.size()) ==
                  ed::harm_dim(n, l));
}

TEST_CASE("plane quadratics and cubics come out in closed form") {
    const auto b2 = ed::harmonic_basis(2, 2);
    REQUIRE(b2.size() == 2);
    const auto x1 = var(2, 0), x2 = var(2, 1);
    CHECK((b2.exact[0] - x1 * x2).terms.empty());
    CHECK((b2.exact[1] - (x1 * x1 - x2 * x2)).terms.empty());

    const auto b3 = ed::harmonic_basis(2, 3);
    REQUIRE(b3.size() == 2);
    const auto c1 = x1 * x1 * x1 - (x1 * x2 * x2).scaled(Rational(3));
    const auto c2 = (x1 * x1 * x2).scaled(Rational(3)) - x2 * x2 * x2;
    bool found1 = false, found2 = false;
    for (const auto& p : b3.exact) {
        if ((p - c1).terms.empty()) found1 = true;
        if ((p - c2).terms.empty()) found2 = true;
    }
    CHECK(found1);
    CHECK(found2);
}

TEST_CASE("four-dimensional quadratics are products and square differences") {
    const auto b = ed::harmonic_basis(4, 2);
    REQUIRE(b.size() == 9);
    int products = 0, differences = 0;
    for (const auto& p : b.exact) {
        if (p.terms.size() == 1)
            ++products; // x_i x_j with coefficient 1
        else if (p.terms.size() == 2)
            ++differences; // x_1^2 - x_k^2
    }
    CHECK(products == 6);
    CHECK(differences == 3);
}

TEST_CASE("every basis element is exactly harmonic with primitive coefficients") {
    for (int n = 2; n <= 4; ++n) {
        for (int l = 1; l <= 5; ++l) {
            const auto b = ed::harmonic_basis(n, l);
            for (const auto& p : b.exact) {
                CHECK(ed::laplacian(p).terms.empty());
                ed::Integer g(0);
                bool integral = true;
                for (const auto& [m, c] : p.terms) {
                    if (c.get_den() != 1) integral = false;
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(),
                            c.get_num().get_mpz_t());
                }
                CHECK(integral);
                CHECK(g == 1);
                // highest monomial in the degree order carries a positive sign
                CHECK(p.terms.rbegin()->second > 0);
            }
        }
    }
}

TEST_CASE("exact sphere inner products match hand values") {
    // The raw nullspace bases are not orthogonal in general; the plane bases
    // are, and the quartic-average cross terms are known exactly elsewhere.
    for (int l = 2; l <= 4; ++l) {
        const auto b = ed::harmonic_basis(2, l);
        REQUIRE(b.size() == 2);
        CHECK(ed::sphere_inner_product(b.exact[0], b.exact[1]) == Rational(0));
    }
    // <x1^2 - x3^2, x2^2 - x3^2> over S^2:
    // 1/15 - 1/15 - 1/15 + 1/5 = 2/15.
    const auto b3 = ed::harmonic_basis(3, 2);
    bool found = false;
    for (int i = 0; i < b3.size(); ++i)
        for (int k = i + 1; k < b3.size(); ++k) {
            const Rational ip =
                ed::sphere_inner_product(b3.exact[i], b3.exact[k]);
            CHECK((ip == Rational(0) || ip == Rational(2, 15)));
            if (ip == Rational(2, 15)) found = true;
        }
    CHECK(found);
}

TEST_CASE("orthonormalization yields the identity Gram matrix") {
    for (int n = 2; n <= 4; ++n) {
        for (int l = 1; l <= 4; ++l) {
            const auto ob = ed::orthonormalize_sphere(ed::harmonic_basis(n, l));
            REQUIRE(ob.orthonormal);
            for (int i = 0; i < ob.size(); ++i) {
                for (int k = 0; k <= i; ++k) {
                    const double ip =
                        numeric_sphere_ip(ob.numeric[i], ob.numeric[k]);
                    CHECK(std::abs(ip - (i == k ? 1.0 : 0.0)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("degree-one orthonormalization scales coordinates by sqrt(n)") {
    for (int n = 2; n <= 5; ++n) {
        const auto ob = ed::orthonormalize_sphere(ed::harmonic_basis(n, 1));
        REQUIRE(ob.size() == n);
        for (int i = 0; i < n; ++i) {
            REQUIRE(ob.numeric[i].terms.size() == 1);
            CHECK(std::abs(ob.numeric[i].terms.begin()->second -
                           std::sqrt(double(n))) < 1e-12);
        }
    }
}

TEST_CASE("plane quadratic orthonormalization has the expected scales") {
    // |x1 x2|^2 averages to 1/8 and |x1^2 - x2^2|^2 to 1/2, so the
    // orthonormal scalings are 2 sqrt(2) and sqrt(2).
    const auto ob = ed::orthonormalize_sphere(ed::harmonic_basis(2, 2));
    REQUIRE(ob.size() == 2);
    CHECK(std::abs(ob.numeric[0].terms.at(Monomial{{1, 1}}) -
                   2.0 * std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(ob.numeric[1].terms.at(Monomial{{2, 0}}) -
                   std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(ob.numeric[1].terms.at(Monomial{{0, 2}}) +
                   std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("cached references are stable and shared") {
    const HarmonicBasis& a = ed::harmonic_basis_ref(3, 2);
    const HarmonicBasis& b = ed::harmonic_basis_ref(3, 2);
    CHECK(&a == &b);
    const HarmonicBasis& oa = ed::orthonormal_basis_ref(3, 2);
    const HarmonicBasis& ob = ed::orthonormal_basis_ref(3, 2);
    CHECK(&oa == &ob);
    CHECK(oa.orthonormal);
}

} // TEST_SUITE
