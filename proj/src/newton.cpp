#include "ed/newton.hpp"

#include <algorithm>
#include <set>

#include "ed/errors.hpp"
#include "ed/rank.hpp"

namespace ed {

DeformationResult newton_deform(const DesignSystem& sys,
                                const std::vector<int>& free_set,
                                const Eigen::VectorXd& free_targets,
                                const NewtonOptions& opt) {
    const int V = sys.num_variables();
    const int K = sys.num_equations();
    if (static_cast<int>(free_set.size()) != free_targets.size())
        throw Error("free set and target vector differ in length");
    std::set<int> seen;
    for (int idx : free_set) {
        if (idx < 0 || idx >= V) throw Error("free variable index out of range");
        if (!seen.insert(idx).second)
            throw Error("free variable listed twice: " + variable_name(sys, idx));
    }
    const std::vector<int> dep = complement_indices(V, free_set);

    DeformationResult res;
    Eigen::VectorXd xi = pack_variables(sys.base);
    for (size_t k = 0; k < free_set.size(); ++k)
        xi[free_set[k]] = free_targets[static_cast<int>(k)];

    auto weights_ok = [&](const Eigen::VectorXd& v) {
        for (int u = 0; u < sys.reps; ++u)
            if (v[sys.weight_index(u)] <= opt.weight_floor) return false;
        return true;
    };
    auto finish = [&](bool ok, int iters, const Eigen::VectorXd& F,
                      std::string msg) {
        res.converged = ok;
        res.iterations = iters;
        res.residual_norm = F.size() ? F.cwiseAbs().maxCoeff() : 0.0;
        res.xi = xi;
        res.reps = unpack_variables(sys, xi);
        res.full = expand_antipodal(sys, res.reps);
        res.message = std::move(msg);
        return res;
    };

    if (!weights_ok(xi))
        return finish(false, 0, evaluate_system(sys, xi),
                      "free targets leave a nonpositive weight");

    Eigen::VectorXd F = evaluate_system(sys, xi);
    for (int iter = 0; iter < opt.max_iter; ++iter) {
        if (F.cwiseAbs().maxCoeff() <= opt.tol)
            return finish(true, iter, F, "converged");
        Eigen::MatrixXd Jdep =
            select_columns(jacobian(sys, xi), dep);
        if (iter == 0) {
            // Rank deficiency alone is harmless when the residual lies in
            // the column range (tie rows can duplicate design equations);
            // only an unreachable residual component is a dead end.
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(Jdep, Eigen::ComputeThinU);
            const Eigen::VectorXd& sv = svd.singularValues();
            int rank = 0;
            for (int k = 0; k < sv.size(); ++k)
                if (sv[k] > opt.rank_tol * sv[0]) ++rank;
            if (rank < K) {
                const Eigen::MatrixXd Ur = svd.matrixU().leftCols(rank);
                const Eigen::VectorXd out = F - Ur * (Ur.transpose() * F);
                if (out.cwiseAbs().maxCoeff() >
                    opt.rank_tol * (1.0 + F.cwiseAbs().maxCoeff()))
                    return finish(
                        false, 0, F,
                        "dependent Jacobian is rank-deficient at the start");
            }
        }
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(Jdep);
        Eigen::VectorXd d = cod.solve(-F);

        const double f0 = F.squaredNorm();
        double alpha = 1.0;
        bool accepted = false;
        for (int h = 0; h <= opt.max_halvings; ++h, alpha *= 0.5) {
            Eigen::VectorXd trial = xi;
            for (size_t k = 0; k < dep.size(); ++k)
                trial[dep[k]] += alpha * d[static_cast<int>(k)];
            if (!weights_ok(trial)) continue;
            Eigen::VectorXd Ftrial = evaluate_system(sys, trial);
            if (Ftrial.squaredNorm() < f0) {
                xi = trial;
                F = Ftrial;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            return finish(false, iter, F, "line search failed to reduce residual");
    }
    if (F.cwiseAbs().maxCoeff() <= opt.tol)
        return finish(true, opt.max_iter, F, "converged");
    return finish(false, opt.max_iter, F, "iteration limit reached");
}

} // namespace ed
