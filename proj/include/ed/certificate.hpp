#pragma once

#include <string>
#include <vector>

#include "ed/newton.hpp"
#include "ed/system.hpp"

namespace ed {

/// Radius merge applied before a stage: rescale point src onto the radius of
/// point dst (indices into the representative state), optionally copying the
/// weight as well. Used to land exactly on a shell-coincidence locus before
/// re-solving with that coincidence enforced as a tie.
struct StageMerge {
    int src = 0;
    int dst = 0;
    bool copy_weight = false;
};

/// One Gauss-Newton solve: pin the named variables at the given targets
/// (NaN target = pin at the current value) subject to the extra norm ties.
/// With no explicit targets, each free variable is pinned at its current
/// value plus perturb_scale times a seeded unit direction.
struct DeformStage {
    std::vector<StageMerge> merges;
    std::vector<std::pair<int, int>> ties;
    std::vector<std::string> free_names;
    std::vector<double> targets;
    double perturb_scale = 0;
    unsigned perturb_seed = 1;
};

struct DeformPlan {
    int t = 0;
    bool antipodal = false;
    std::vector<DeformStage> stages;
    NewtonOptions newton;
};

struct PlanResult {
    bool converged = false;
    int iterations = 0; // summed over stages
    WeightedPointSet reps;
    WeightedPointSet full;
    std::vector<DeformationResult> stage_results;
    std::string message;
};

PlanResult run_deform_plan(const WeightedPointSet& X, const DeformPlan& plan);

/// Single stage freeing every weight at w_i + scale * u_i for a seeded unit
/// direction u.
DeformPlan all_weights_plan(const WeightedPointSet& X, int t, bool antipodal,
                            double scale = 1e-3, unsigned seed = 1);

/// Deformations of the two-triangle 4-design at radius 2 (six points). The
/// four-shell plan ties points (1,3) and (4,5) and retargets three weights;
/// the three-shell plan then merges point 2 back onto the first shell and
/// re-solves with the coincidence tied.
DeformPlan four_design_four_shell_plan(double d = 1e-2);
DeformPlan four_design_three_shell_plan(double d = 1e-2);

/// Deformation of the antipodal 5-design at radius 2 (eight points, four
/// representatives) to three representative shells: free the axis
/// representatives' coordinates, then merge the diagonal pair.
DeformPlan five_design_three_shell_plan(double scale = 1e-3,
                                        unsigned seed = 1);

struct Certificate {
    int t = 0;
    bool converged = false;
    int iterations = 0;
    double residual = 0; // max-abs moment residual of the deformed design
    WeightedPointSet original;       // full original design
    WeightedPointSet deformed;       // full deformed design
    WeightedPointSet original_reps;  // representative states used for the
    WeightedPointSet deformed_reps;  // index-matched comparison below
    std::vector<double> radii_before;
    std::vector<double> radii_after;
    double scale_factor = 1;  // best scale lambda matching deformed to original
    double weight_factor = 1; // best weight factor mu
    double gauge_distance = 0; // residual distance after the best scale/reweight
    double max_displacement = 0;
    double max_weight_delta = 0;
    std::string message;
};

/// Run the plan and certify that the deformed configuration is a t-design
/// not reachable from the original by scaling and reweighting alone.
Certificate strong_nonrigidity_certificate(const WeightedPointSet& X,
                                           const DeformPlan& plan);

} // namespace ed
