#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ed/point_set.hpp"
#include "ed/polynomial.hpp"

namespace ed {

/// One moment equation sum_u w(u) ||u||^(2j) phi(u) = 0 for a fixed harmonic
/// basis element phi of degree l (index i within the degree-l basis).
struct SystemEquation {
    int l = 0;
    int j = 0;
    int i = 0;
    CompiledPoly phi;
    std::vector<CompiledPoly> dphi; // one partial derivative per coordinate
};

/// The design conditions of strength t as a square-free polynomial system in
/// the point coordinates and weights. Variables are ordered coordinates
/// first (row-major by point), then all weights. In antipodal mode only one
/// representative per antipodal pair is carried; odd-degree equations vanish
/// identically and are dropped, and the remaining sums gain a factor 2.
struct DesignSystem {
    int n = 0;
    int t = 0;
    int reps = 0;
    bool antipodal = false;
    double multiplier = 1.0;
    std::vector<SystemEquation> equations;
    std::vector<std::pair<int, int>> norm_ties; // ||x_a||^2 = ||x_b||^2 rows
    WeightedPointSet base; // representatives (full set when not antipodal)

    int num_variables() const { return reps * (n + 1); }
    int num_moment_equations() const {
        return static_cast<int>(equations.size());
    }
    int num_equations() const {
        return num_moment_equations() + static_cast<int>(norm_ties.size());
    }
    int coord_index(int point, int c) const { return point * n + c; }
    int weight_index(int point) const { return reps * n + point; }
};

/// Assemble the system for X at strength t. antipodal_mode requires X to be
/// antipodal and works on the representative half.
DesignSystem build_design_system(const WeightedPointSet& X, int t,
                                 bool antipodal_mode = false);

/// Representative state -> variable vector (coordinates then weights).
Eigen::VectorXd pack_variables(const WeightedPointSet& X);

/// Variable vector -> representative state.
WeightedPointSet unpack_variables(const DesignSystem& sys,
                                  const Eigen::VectorXd& xi);

/// Representative state -> full point set (mirrors each representative in
/// antipodal mode; the origin, if present, appears once). Identity for
/// non-antipodal systems.
WeightedPointSet expand_antipodal(const DesignSystem& sys,
                                  const WeightedPointSet& reps);

/// Residual vector: moment equations first, norm-tie rows last.
Eigen::VectorXd evaluate_system(const DesignSystem& sys,
                                const Eigen::VectorXd& xi);

/// Analytic Jacobian of evaluate_system, num_equations x num_variables.
Eigen::MatrixXd jacobian(const DesignSystem& sys, const Eigen::VectorXd& xi);

/// Symbolic variable names: "x<point>.<coord>" and "w<point>", 1-based.
int variable_index(const DesignSystem& sys, const std::string& name);
std::string variable_name(const DesignSystem& sys, int index);

} // namespace ed
