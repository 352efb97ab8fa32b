#include "ed/certificate.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ed/errors.hpp"
#include "ed/verify.hpp"

namespace ed {
namespace {

// Deterministic unit direction for target perturbations.
Eigen::VectorXd seeded_unit_vector(int dim, unsigned seed) {
    std::mt19937_64 gen(seed);
    Eigen::VectorXd u(dim);
    for (int i = 0; i < dim; ++i) {
        const double v = (gen() >> 11) * 0x1.0p-53; // uniform in [0,1)
        u[i] = 2.0 * v - 1.0;
    }
    const double norm = u.norm();
    if (norm == 0) {
        u.setZero();
        u[0] = 1.0;
        return u;
    }
    return u / norm;
}

} // namespace

PlanResult run_deform_plan(const WeightedPointSet& X, const DeformPlan& plan) {
    if (plan.stages.empty()) throw Error("deformation plan has no stages");
    PlanResult out;
    WeightedPointSet current = X;
    for (size_t si = 0; si < plan.stages.size(); ++si) {
        const DeformStage& stage = plan.stages[si];
        DesignSystem sys = build_design_system(current, plan.t, plan.antipodal);
        for (const StageMerge& m : stage.merges) {
            if (m.src < 0 || m.src >= sys.reps || m.dst < 0 || m.dst >= sys.reps)
                throw Error("merge index out of range");
            const double rs = sys.base.points[m.src].norm();
            const double rd = sys.base.points[m.dst].norm();
            if (rs <= 0) throw Error("cannot rescale a point at the origin");
            sys.base.points[m.src] *= rd / rs;
            if (m.copy_weight) sys.base.weights[m.src] = sys.base.weights[m.dst];
        }
        sys.norm_ties = stage.ties;
        for (auto [a, b] : sys.norm_ties)
            if (a < 0 || a >= sys.reps || b < 0 || b >= sys.reps)
                throw Error("tie index out of range");

        const Eigen::VectorXd xi0 = pack_variables(sys.base);
        std::vector<int> free_set;
        const int nfree = static_cast<int>(stage.free_names.size());
        Eigen::VectorXd targets(nfree);
        if (!stage.targets.empty() &&
            stage.targets.size() != stage.free_names.size())
            throw Error("stage targets and free names differ in length");
        Eigen::VectorXd perturb = Eigen::VectorXd::Zero(nfree);
        if (stage.targets.empty() && stage.perturb_scale != 0 && nfree > 0)
            perturb = stage.perturb_scale *
                      seeded_unit_vector(nfree, stage.perturb_seed);
        for (int k = 0; k < nfree; ++k) {
            const int idx = variable_index(sys, stage.free_names[k]);
            free_set.push_back(idx);
            const double tv =
                stage.targets.empty() ? std::nan("") : stage.targets[k];
            targets[k] = std::isnan(tv) ? xi0[idx] + perturb[k] : tv;
        }

        DeformationResult r = newton_deform(sys, free_set, targets, plan.newton);
        out.iterations += r.iterations;
        out.reps = r.reps;
        out.full = r.full;
        out.stage_results.push_back(r);
        if (!r.converged) {
            std::ostringstream os;
            os << "stage " << (si + 1) << " failed: " << r.message;
            out.message = os.str();
            out.converged = false;
            return out;
        }
        current = r.full;
    }
    out.converged = true;
    out.message = "converged";
    return out;
}

DeformPlan all_weights_plan(const WeightedPointSet& X, int t, bool antipodal,
                            double scale, unsigned seed) {
    const WeightedPointSet reps = antipodal ? antipodal_half(X) : X;
    DeformPlan plan;
    plan.t = t;
    plan.antipodal = antipodal;
    DeformStage stage;
    for (int i = 0; i < reps.size(); ++i)
        stage.free_names.push_back("w" + std::to_string(i + 1));
    stage.perturb_scale = scale;
    stage.perturb_seed = seed;
    plan.stages.push_back(std::move(stage));
    return plan;
}

DeformPlan four_design_four_shell_plan(double d) {
    DeformPlan plan;
    plan.t = 4;
    DeformStage stage;
    stage.ties = {{0, 2}, {3, 4}};
    stage.free_names = {"w2", "w4", "w6"};
    stage.targets = {1.0 + d, (1.0 + d) / 8.0, (1.0 - d) / 8.0};
    plan.stages.push_back(std::move(stage));
    return plan;
}

DeformPlan four_design_three_shell_plan(double d) {
    DeformPlan plan = four_design_four_shell_plan(d);
    DeformStage stage2;
    stage2.merges = {{1, 0, true}};
    stage2.ties = {{0, 1}, {1, 2}, {3, 4}};
    stage2.free_names = {"w1"};
    plan.stages.push_back(std::move(stage2));
    return plan;
}

DeformPlan five_design_three_shell_plan(double scale, unsigned seed) {
    DeformPlan plan;
    plan.t = 5;
    plan.antipodal = true;
    DeformStage stage1;
    stage1.free_names = {"x1.1", "x1.2", "x2.1", "x2.2"}; // axis representatives
    stage1.perturb_scale = scale;
    stage1.perturb_seed = seed;
    plan.stages.push_back(std::move(stage1));
    DeformStage stage2;
    stage2.merges = {{3, 2, false}};
    stage2.ties = {{2, 3}};
    stage2.free_names = {"w1"};
    plan.stages.push_back(std::move(stage2));
    return plan;
}

Certificate strong_nonrigidity_certificate(const WeightedPointSet& X,
                                           const DeformPlan& plan) {
    Certificate c;
    c.t = plan.t;
    c.original = X;
    c.original_reps = plan.antipodal ? antipodal_half(X) : X;

    PlanResult pr = run_deform_plan(X, plan);
    c.converged = pr.converged;
    c.iterations = pr.iterations;
    c.deformed_reps = pr.reps;
    c.deformed = pr.full;
    c.message = pr.message;
    if (!pr.converged) return c;

    c.residual = moment_residuals(c.deformed, plan.t).max_abs_residual;
    c.radii_before = decompose_shells(c.original).radii;
    c.radii_after = decompose_shells(c.deformed).radii;

    // Best scale/reweight match of the deformed representatives onto the
    // originals, index-aligned; both minimizations are linear least squares.
    const WeightedPointSet& a = c.original_reps;
    const WeightedPointSet& b = c.deformed_reps;
    double xy = 0, xx = 0, wv = 0, ww = 0;
    for (int i = 0; i < a.size(); ++i) {
        xy += a.points[i].dot(b.points[i]);
        xx += a.points[i].squaredNorm();
        wv += a.weights[i] * b.weights[i];
        ww += a.weights[i] * a.weights[i];
    }
    c.scale_factor = xx > 0 ? xy / xx : 1.0;
    c.weight_factor = ww > 0 ? wv / ww : 1.0;
    double dist2 = 0;
    for (int i = 0; i < a.size(); ++i) {
        dist2 += (b.points[i] - c.scale_factor * a.points[i]).squaredNorm();
        const double dw = b.weights[i] - c.weight_factor * a.weights[i];
        dist2 += dw * dw;
        c.max_displacement = std::max(
            c.max_displacement, (b.points[i] - a.points[i]).norm());
        c.max_weight_delta = std::max(
            c.max_weight_delta, std::abs(b.weights[i] - a.weights[i]));
    }
    c.gauge_distance = std::sqrt(dist2);
    return c;
}

} // namespace ed
