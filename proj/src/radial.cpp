#include "ed/radial.hpp"

#include <cmath>

#include "ed/errors.hpp"
#include "ed/gegenbauer.hpp"
#include "ed/harmonic.hpp"

namespace ed {

std::vector<double> radial_moments(const WeightedPointSet& X, int max_m) {
    std::vector<double> a(max_m + 1, 0.0);
    for (int u = 0; u < X.size(); ++u) {
        double s = X.points[u].squaredNorm();
        double pw = X.weights[u];
        for (int m = 0; m <= max_m; ++m) {
            a[m] += pw;
            pw *= s;
        }
    }
    return a;
}

double RadialFunctions::evaluate(int j, double s) const {
    const auto& c = coeffs[j];
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
}

namespace {

// Rows of inv(chol(G)) for the Hankel Gram G_{jk} = a[l+j+k]; these are the
// coefficient rows of the orthonormal radial family.
RadialFunctions radial_gs_from_moments(const std::vector<double>& a, int l,
                                       int count) {
    Eigen::MatrixXd g(count, count);
    for (int j = 0; j < count; ++j)
        for (int k = 0; k < count; ++k) g(j, k) = a[l + j + k];
    // Cholesky with an explicit pivot guard: a semi-definite Gram means the
    // radial family is linearly dependent on the support.
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(count, count);
    for (int j = 0; j < count; ++j) {
        for (int k = 0; k <= j; ++k) {
            double sum = g(j, k);
            for (int m = 0; m < k; ++m) sum -= L(j, m) * L(k, m);
            if (k == j) {
                if (sum <= 1e-13 * std::abs(g(j, j)))
                    throw Error("weighted_gram_schmidt: singular Gram matrix "
                                "(fewer weighted radii than functions)");
                L(j, j) = std::sqrt(sum);
            } else {
                L(j, k) = sum / L(k, k);
            }
        }
    }
    Eigen::MatrixXd linv =
        L.triangularView<Eigen::Lower>().solve(
            Eigen::MatrixXd::Identity(count, count));
    RadialFunctions r;
    r.l = l;
    r.coeffs.resize(count);
    for (int j = 0; j < count; ++j) {
        r.coeffs[j].resize(j + 1); // g_{l,j} has degree j in s
        for (int k = 0; k <= j; ++k) r.coeffs[j][k] = linv(j, k);
    }
    return r;
}

} // namespace

RadialFunctions weighted_gram_schmidt(const WeightedPointSet& X, int l,
                                      int count) {
    if (count < 1) throw Error("weighted_gram_schmidt: count must be >= 1");
    auto a = radial_moments(X, l + 2 * (count - 1));
    return radial_gs_from_moments(a, l, count);
}

std::vector<HBlock> h_blocks(int e, int p, int epsilon_S, bool star) {
    std::vector<HBlock> blocks;
    int j0 = std::min(p - 1, e / 2);
    if (!star || e % 2 == 0) blocks.push_back({0, j0});
    int lstart = star ? (e % 2 == 0 ? 2 : 1) : 1;
    int lstep = star ? 2 : 1;
    for (int l = lstart; l <= e; l += lstep) {
        int jmax = std::min(p - epsilon_S - 1, (e - l) / 2);
        if (jmax >= 0) blocks.push_back({l, jmax});
    }
    return blocks;
}

namespace {

struct IdentityContext {
    WeightedPointSet X;
    std::vector<HBlock> blocks;
    std::vector<RadialFunctions> radial; // parallel to blocks
    std::vector<GegenbauerPoly> q;       // parallel, unused slot for l = 0
};

IdentityContext build_context(const WeightedPointSet& X_in, int e, bool star,
                              double group_tol) {
    IdentityContext ctx;
    ctx.X = star ? antipodal_half(X_in) : X_in;
    if (star)
        for (auto& w : ctx.X.weights) w *= 2;
    auto shells = decompose_shells(ctx.X, group_tol);
    ctx.blocks = h_blocks(e, shells.p(), shells.epsilon_S, star);
    for (const auto& b : ctx.blocks) {
        ctx.radial.push_back(weighted_gram_schmidt(ctx.X, b.l, b.jmax + 1));
        ctx.q.push_back(b.l >= 1 ? gegenbauer(ctx.X.n, b.l)
                                 : GegenbauerPoly{});
    }
    return ctx;
}

} // namespace

TightIdentityResult tight_identity_check(const WeightedPointSet& X, int e,
                                         bool star, double group_tol) {
    auto ctx = build_context(X, e, star, group_tol);
    const auto& Y = ctx.X;
    const int N = Y.size();
    std::vector<double> s(N), nrm(N);
    for (int u = 0; u < N; ++u) {
        s[u] = Y.points[u].squaredNorm();
        nrm[u] = std::sqrt(s[u]);
    }
    TightIdentityResult res;
    for (int u = 0; u < N; ++u) {
        double lhs = 0;
        for (size_t b = 0; b < ctx.blocks.size(); ++b) {
            int l = ctx.blocks[b].l;
            double gsum = 0;
            for (int j = 0; j <= ctx.blocks[b].jmax; ++j) {
                double gj = ctx.radial[b].evaluate(j, s[u]);
                gsum += gj * gj;
            }
            if (l == 0)
                lhs += gsum;
            else
                lhs += gsum * std::pow(s[u], l) * ctx.q[b].evaluate(1.0);
        }
        res.diagonal_residual = std::max(
            res.diagonal_residual, std::abs(lhs - 1.0 / Y.weights[u]));
    }
    for (int u = 0; u < N; ++u) {
        for (int v = u + 1; v < N; ++v) {
            double lhs = 0;
            for (size_t b = 0; b < ctx.blocks.size(); ++b) {
                int l = ctx.blocks[b].l;
                double gsum = 0;
                for (int j = 0; j <= ctx.blocks[b].jmax; ++j)
                    gsum += ctx.radial[b].evaluate(j, s[u]) *
                            ctx.radial[b].evaluate(j, s[v]);
                if (l == 0) {
                    lhs += gsum;
                } else {
                    if (nrm[u] == 0 || nrm[v] == 0) continue;
                    double cosang =
                        Y.points[u].dot(Y.points[v]) / (nrm[u] * nrm[v]);
                    lhs += gsum * std::pow(nrm[u] * nrm[v], l) *
                           ctx.q[b].evaluate(cosang);
                }
            }
            res.offdiagonal_residual =
                std::max(res.offdiagonal_residual, std::abs(lhs));
        }
    }
    return res;
}

DesignMatrixReport design_matrix_M(const WeightedPointSet& X, int e, bool star,
                                   double group_tol) {
    auto ctx = build_context(X, e, star, group_tol);
    const auto& Y = ctx.X;
    const int N = Y.size();

    DesignMatrixReport rep;
    for (size_t b = 0; b < ctx.blocks.size(); ++b)
        for (int j = 0; j <= ctx.blocks[b].jmax; ++j) {
            int hl = ctx.blocks[b].l == 0
                         ? 1
                         : static_cast<int>(harm_dim(Y.n, ctx.blocks[b].l));
            for (int i = 0; i < hl; ++i)
                rep.columns.emplace_back(ctx.blocks[b].l, j, i);
        }
    rep.M.resize(N, static_cast<int>(rep.columns.size()));

    std::vector<double> s(N);
    for (int u = 0; u < N; ++u) s[u] = Y.points[u].squaredNorm();

    int col = 0;
    for (size_t b = 0; b < ctx.blocks.size(); ++b) {
        int l = ctx.blocks[b].l;
        std::vector<CompiledPoly> phis;
        if (l >= 1) {
            const auto& basis = orthonormal_basis_ref(Y.n, l);
            for (const auto& p : basis.numeric) phis.push_back(compile(p));
        }
        for (int j = 0; j <= ctx.blocks[b].jmax; ++j) {
            if (l == 0) {
                for (int u = 0; u < N; ++u)
                    rep.M(u, col) = std::sqrt(Y.weights[u]) *
                                    ctx.radial[b].evaluate(j, s[u]);
                ++col;
            } else {
                for (size_t i = 0; i < phis.size(); ++i) {
                    for (int u = 0; u < N; ++u)
                        rep.M(u, col) = std::sqrt(Y.weights[u]) *
                                        ctx.radial[b].evaluate(j, s[u]) *
                                        phis[i].eval(Y.points[u].data());
                    ++col;
                }
            }
        }
    }

    const int H = rep.M.cols();
    rep.square = N == H;
    rep.tmm_residual = (rep.M.transpose() * rep.M -
                        Eigen::MatrixXd::Identity(H, H))
                           .cwiseAbs()
                           .maxCoeff();
    rep.mmt_residual = (rep.M * rep.M.transpose() -
                        Eigen::MatrixXd::Identity(N, N))
                           .cwiseAbs()
                           .maxCoeff();
    return rep;
}

} // namespace ed
