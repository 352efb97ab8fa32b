#pragma once

#include <map>
#include <vector>

#include "ed/errors.hpp"
#include "ed/monomial.hpp"
#include "ed/rational.hpp"

namespace ed {

/// Sparse multivariate polynomial with coefficients of type C (Rational for
/// exact arithmetic, double for evaluation paths). Zero coefficients are
/// never stored; all stored monomials share the ambient dimension n.
template <class C>
struct Polynomial {
    int n = 0;
    std::map<Monomial, C, GrlexLess> terms;

    Polynomial() = default;
    explicit Polynomial(int dim) : n(dim) {}

    static Polynomial zero(int dim) { return Polynomial(dim); }

    static Polynomial constant(int dim, const C& v) {
        Polynomial p(dim);
        if (!(v == C(0))) p.terms.emplace(Monomial(std::vector<int>(dim, 0)), v);
        return p;
    }

    static Polynomial variable(int dim, int i) {
        Polynomial p(dim);
        std::vector<int> e(dim, 0);
        e[i] = 1;
        p.terms.emplace(Monomial(std::move(e)), C(1));
        return p;
    }

    static Polynomial monomial(int dim, const Monomial& m, const C& c) {
        Polynomial p(dim);
        if (!(c == C(0))) p.terms.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const C& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!(c == C(0))) terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == C(0)) terms.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms) add_term(m, C(-c));
        return *this;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        r += o;
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        r -= o;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_dim(o);
        Polynomial r(n);
        for (const auto& [ma, ca] : terms)
            for (const auto& [mb, cb] : o.terms) {
                std::vector<int> e(n);
                for (int i = 0; i < n; ++i)
                    e[i] = ma.exponents[i] + mb.exponents[i];
                r.add_term(Monomial(std::move(e)), ca * cb);
            }
        return r;
    }

    Polynomial scaled(const C& s) const {
        Polynomial r(n);
        if (s == C(0)) return r;
        for (const auto& [m, c] : terms) r.terms.emplace(m, c * s);
        return r;
    }

    /// Partial derivative with respect to x_i.
    Polynomial derivative(int i) const {
        Polynomial r(n);
        for (const auto& [m, c] : terms) {
            if (m.exponents[i] == 0) continue;
            std::vector<int> e = m.exponents;
            C nc = c * C(e[i]);
            e[i] -= 1;
            r.add_term(Monomial(std::move(e)), nc);
        }
        return r;
    }

    template <class X>
    X evaluate(const std::vector<X>& x) const {
        if (static_cast<int>(x.size()) != n)
            throw Error("evaluate: point dimension mismatch");
        X acc(0);
        for (const auto& [m, c] : terms) {
            X t(c);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < m.exponents[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

private:
    void check_dim(const Polynomial& o) const {
        if (n != o.n) throw Error("polynomial dimension mismatch");
    }
};

using RationalPoly = Polynomial<Rational>;
using DoublePoly = Polynomial<double>;

/// Sum of second partials; the zero polynomial characterizes harmonicity.
template <class C>
Polynomial<C> laplacian(const Polynomial<C>& p) {
    Polynomial<C> r(p.n);
    for (int i = 0; i < p.n; ++i) r += p.derivative(i).derivative(i);
    return r;
}

DoublePoly to_double(const RationalPoly& p);

/// Flattened constant-coefficient form for tight evaluation loops.
struct CompiledPoly {
    int n = 0;
    int nterms = 0;
    std::vector<int> exps;      // nterms * n, row-major
    std::vector<double> coef;   // nterms

    double eval(const double* x) const {
        double acc = 0;
        const int* e = exps.data();
        for (int t = 0; t < nterms; ++t, e += n) {
            double v = coef[t];
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) v *= x[i];
            acc += v;
        }
        return acc;
    }
};

CompiledPoly compile(const DoublePoly& p);
CompiledPoly compile(const RationalPoly& p);

} // namespace ed
