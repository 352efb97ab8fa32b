#include "ed/construct.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "ed/errors.hpp"

namespace ed {

FeasibilityReport f_recurrence(const RadiiSpec& R) {
    FeasibilityReport rep;
    const int n = static_cast<int>(R.size());
    rep.f.assign(n + 1, 0.0);
    rep.f[0] = 1.0;
    double prod = 1.0; // prod_{i<k} (R_i + 1)
    for (int k = 1; k <= n; ++k) {
        rep.f[k] = rep.f[k - 1] * (R[k - 1] + 1.0) - prod;
        prod *= R[k - 1] + 1.0;
        if (!(rep.f[k] > 0)) {
            std::ostringstream os;
            os << "f_" << k << " = " << rep.f[k] << " must be positive";
            rep.violation = os.str();
            return rep;
        }
    }
    if (!(rep.f[n] < prod)) {
        std::ostringstream os;
        os << "f_" << n << " = " << rep.f[n]
           << " must be below prod(R_i + 1) = " << prod;
        rep.violation = os.str();
        return rep;
    }
    rep.feasible = true;
    rep.R_next = prod / rep.f[n] - 1.0;
    return rep;
}

WeightedPointSet tight_two_design_from_radii(const RadiiSpec& R,
                                             bool unit_weights) {
    const int n = static_cast<int>(R.size());
    if (n < 1) throw Error("need at least one prescribed squared norm");
    for (int k = 0; k < n; ++k)
        if (!(R[k] > 0)) throw InfeasibleError("squared norms must be positive");
    FeasibilityReport rep = f_recurrence(R);
    if (!rep.feasible) throw InfeasibleError(rep.violation);

    // x_k lives in the span of e_1..e_k with positive k-th coordinate
    // x_{k,k} = sqrt(f_k / f_{k-1}); below the diagonal every point shares
    // the coordinate b_j = -prod_{i<j}(R_i+1) / sqrt(f_{j-1} f_j), forced by
    // <x_j, x_k> = -1 for j < k. The final point x_{n+1} has no diagonal
    // entry and squared norm R_{n+1} = prod(R_i+1)/f_n - 1.
    WeightedPointSet X;
    X.n = n;
    std::vector<double> diag(n + 1), sub(n + 1);
    double prod = 1.0;
    for (int k = 1; k <= n; ++k) {
        diag[k] = std::sqrt(rep.f[k] / rep.f[k - 1]);
        sub[k] = -prod / std::sqrt(rep.f[k - 1] * rep.f[k]);
        prod *= R[k - 1] + 1.0;
    }
    for (int k = 1; k <= n + 1; ++k) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        for (int j = 1; j < k && j <= n; ++j) x[j - 1] = sub[j];
        if (k <= n) x[k - 1] = diag[k];
        X.points.push_back(x);
        X.weights.push_back(unit_weights ? 1.0 : 1.0 / (1.0 + x.squaredNorm()));
    }
    return X;
}

WeightedPointSet regular_simplex(int n) {
    if (n < 1) throw Error("dimension must be at least 1");
    // First n vertices: a on the diagonal-complement, b elsewhere; last
    // vertex is the normalized all-ones vector. All unit norm, pairwise
    // inner products -1/n.
    const double rn = std::sqrt(static_cast<double>(n));
    const double rnp = std::sqrt(static_cast<double>(n + 1));
    const double a = -(1.0 + (n - 1.0) * rnp) / (n * rn);
    const double b = (-1.0 + rnp) / (n * rn);
    WeightedPointSet X;
    X.n = n;
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd x = Eigen::VectorXd::Constant(n, b);
        x[k] = a;
        X.points.push_back(x);
        X.weights.push_back(1.0);
    }
    X.points.push_back(Eigen::VectorXd::Constant(n, 1.0 / rn));
    X.weights.push_back(1.0);
    return X;
}

WeightedPointSet tight_four_design_r2(double r) {
    if (!(r > 0)) throw InfeasibleError("radius must be positive");
    if (r == 1.0)
        throw InfeasibleError("radius 1 collapses both shells onto a hexagon");
    WeightedPointSet X;
    X.n = 2;
    const double pi = std::acos(-1.0);
    for (int j = 0; j < 3; ++j) {
        double th = 2.0 * pi * j / 3.0;
        X.points.push_back(Eigen::Vector2d(std::cos(th), std::sin(th)));
        X.weights.push_back(1.0);
    }
    for (int j = 0; j < 3; ++j) {
        // Outer triangle is the antipodal image of the inner one.  The
        // enumeration runs clockwise so that points 3,4,5 land at angles
        // pi, pi/3, 5pi/3: index-based tie and free-variable recipes for
        // this family depend on that order.
        double th = pi - 2.0 * pi * j / 3.0;
        X.points.push_back(r * Eigen::Vector2d(std::cos(th), std::sin(th)));
        X.weights.push_back(1.0 / (r * r * r));
    }
    return X;
}

WeightedPointSet antipodal_five_design_r2(double r) {
    if (!(r > 0)) throw InfeasibleError("radius must be positive");
    if (r == 1.0)
        throw InfeasibleError("radius 1 collapses both shells onto an octagon");
    WeightedPointSet X;
    X.n = 2;
    // Antipodal pairs adjacent: (e1,-e1), (e2,-e2), then the diagonals.
    X.points.push_back(Eigen::Vector2d(1, 0));
    X.points.push_back(Eigen::Vector2d(-1, 0));
    X.points.push_back(Eigen::Vector2d(0, 1));
    X.points.push_back(Eigen::Vector2d(0, -1));
    const double c = r / std::sqrt(2.0);
    X.points.push_back(Eigen::Vector2d(c, c));
    X.points.push_back(Eigen::Vector2d(-c, -c));
    X.points.push_back(Eigen::Vector2d(c, -c));
    X.points.push_back(Eigen::Vector2d(-c, c));
    const double w2 = 1.0 / (r * r * r * r);
    for (int i = 0; i < 4; ++i) X.weights.push_back(1.0);
    for (int i = 0; i < 4; ++i) X.weights.push_back(w2);
    return X;
}

WeightedPointSet bajnok_three_design(int p, const std::vector<double>& radii) {
    if (p != 1 && p != 2) throw InfeasibleError("shell count must be 1 or 2");
    if (static_cast<int>(radii.size()) != p)
        throw InfeasibleError("need one radius per shell");
    std::set<double> distinct;
    for (double r : radii) {
        if (!(r > 0)) throw InfeasibleError("radii must be positive");
        distinct.insert(r);
    }
    if (static_cast<int>(distinct.size()) != p)
        throw InfeasibleError("radii must be distinct");
    const int m = 6 - 2 * p; // points per shell
    WeightedPointSet X;
    X.n = 2;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < p; ++k) {
        const double r = radii[k];
        for (int j = 0; j < m; ++j) {
            double th = (2.0 * j + k) * pi / m;
            X.points.push_back(r * Eigen::Vector2d(std::cos(th), std::sin(th)));
            X.weights.push_back(1.0 / (r * r));
        }
    }
    return X;
}

WeightedPointSet cross_polytope_three_design(const std::vector<double>& radii) {
    const int n = static_cast<int>(radii.size());
    if (n < 1) throw Error("need at least one radius");
    for (double r : radii)
        if (!(r > 0)) throw InfeasibleError("radii must be positive");
    WeightedPointSet X;
    X.n = n;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        x[i] = radii[i];
        X.points.push_back(x);
        X.points.push_back(-x);
        const double w = 1.0 / (n * radii[i] * radii[i]);
        X.weights.push_back(w);
        X.weights.push_back(w);
    }
    return X;
}

WeightedPointSet scale_design(const WeightedPointSet& X, double lambda) {
    if (!(lambda > 0)) throw Error("scale factor must be positive");
    WeightedPointSet Y = X;
    for (auto& x : Y.points) x *= lambda;
    return Y;
}

WeightedPointSet reweight_design(const WeightedPointSet& X, double mu) {
    if (!(mu > 0)) throw Error("weight factor must be positive");
    WeightedPointSet Y = X;
    for (auto& w : Y.weights) w *= mu;
    return Y;
}

} // namespace ed
