#include "ed/verify.hpp"

#include <cmath>

#include "ed/errors.hpp"
#include "ed/harmonic.hpp"
#include "ed/moments.hpp"

namespace ed {

long moment_equation_count(int n, int t) {
    long count = 0;
    for (int l = 1; l <= t; ++l)
        count += ((t - l) / 2 + 1) * harm_dim(n, l);
    return count;
}

StrengthReport moment_residuals(const WeightedPointSet& X, int t, double tol) {
    if (t < 1) throw Error("moment_residuals: strength must be >= 1");
    validate(X);
    const int N = X.size();
    std::vector<double> s(N);
    for (int i = 0; i < N; ++i) s[i] = X.points[i].squaredNorm();

    StrengthReport rep;
    rep.strength = t;
    rep.tolerance = tol;
    for (int l = 1; l <= t; ++l) {
        const auto& basis = harmonic_basis_ref(X.n, l);
        std::vector<CompiledPoly> phis;
        phis.reserve(basis.size());
        for (const auto& p : basis.numeric) phis.push_back(compile(p));
        std::vector<std::vector<double>> vals(basis.size(),
                                              std::vector<double>(N));
        for (int i = 0; i < basis.size(); ++i)
            for (int u = 0; u < N; ++u)
                vals[i][u] = phis[i].eval(X.points[u].data());
        for (int j = 0; j <= (t - l) / 2; ++j) {
            for (int i = 0; i < basis.size(); ++i) {
                double acc = 0;
                for (int u = 0; u < N; ++u)
                    acc += X.weights[u] * std::pow(s[u], j) * vals[i][u];
                rep.residuals.push_back({l, j, i, acc});
                rep.max_abs_residual =
                    std::max(rep.max_abs_residual, std::abs(acc));
            }
        }
    }
    rep.is_design = rep.max_abs_residual <= tol;
    return rep;
}

double verify_design_integral(const WeightedPointSet& X, int t,
                              double group_tol) {
    if (t < 1) throw Error("verify_design_integral: strength must be >= 1");
    validate(X);
    auto shells = decompose_shells(X, group_tol);
    double worst = 0;
    for (const auto& alpha : monomials_up_to_degree(X.n, t)) {
        int deg = alpha.degree();
        double lhs = 0;
        for (int sidx = 0; sidx < shells.p(); ++sidx) {
            double r = shells.radii[sidx];
            double w = shells.shell_weights[sidx];
            if (r < group_tol) {
                lhs += w * (deg == 0 ? 1.0 : 0.0);
            } else {
                lhs += w * std::pow(r, deg) *
                       to_double(sphere_monomial_average(alpha, X.n));
            }
        }
        double rhs = 0;
        for (int u = 0; u < X.size(); ++u) {
            double term = X.weights[u];
            for (int i = 0; i < X.n; ++i)
                for (int k = 0; k < alpha.exponents[i]; ++k)
                    term *= X.points[u](i);
            rhs += term;
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace ed
