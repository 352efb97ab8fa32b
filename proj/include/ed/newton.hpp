#pragma once

#include <string>
#include <vector>

#include "ed/system.hpp"

namespace ed {

struct NewtonOptions {
    double tol = 1e-11;        // max-abs residual accepted as converged
    int max_iter = 50;
    int max_halvings = 30;     // step halvings per iteration
    double rank_tol = 1e-8;    // initial dependent-Jacobian rank check
    double weight_floor = 0.0; // steps taking any weight to or below are rejected
};

struct DeformationResult {
    bool converged = false;
    int iterations = 0;
    double residual_norm = 0; // max-abs of the system residual at exit
    Eigen::VectorXd xi;
    WeightedPointSet reps; // deformed representative state
    WeightedPointSet full; // antipodal expansion (equals reps otherwise)
    std::string message;
};

/// Pin the free variables at the given targets and solve the remaining
/// system for the dependent variables by Gauss-Newton with minimal-norm
/// steps and residual-decrease line search. Fails fast when the dependent
/// Jacobian lacks full row rank at the start AND the initial residual has
/// a component outside its column range: redundant-but-consistent systems
/// (tie rows implied by the design equations) still solve cleanly, while a
/// genuinely obstructed free set cannot reach zero residual at all.
DeformationResult newton_deform(const DesignSystem& sys,
                                const std::vector<int>& free_set,
                                const Eigen::VectorXd& free_targets,
                                const NewtonOptions& opt = {});

} // namespace ed
