#include "ed/tightness.hpp"

#include <algorithm>

#include "ed/dimensions.hpp"

namespace ed {

namespace {

double per_shell_weight_spread(const WeightedPointSet& X,
                               const ShellDecomposition& shells) {
    double spread = 0;
    for (int s = 0; s < shells.p(); ++s) {
        double lo = 0, hi = 0;
        bool first = true;
        for (int i = 0; i < X.size(); ++i) {
            if (shells.membership[i] != s) continue;
            double w = X.weights[i];
            if (first) {
                lo = hi = w;
                first = false;
            } else {
                lo = std::min(lo, w);
                hi = std::max(hi, w);
            }
        }
        spread = std::max(spread, hi - lo);
    }
    return spread;
}

} // namespace

TightnessReport classify_tightness(const WeightedPointSet& X, int t,
                                   double tol, double group_tol) {
    TightnessReport rep;
    rep.strength = t;
    rep.strength_report = moment_residuals(X, t, tol);
    auto shells = decompose_shells(X, group_tol);
    rep.weight_spread = per_shell_weight_spread(X, shells);

    const int e = t / 2;
    if (t % 2 == 0) {
        rep.cardinality = X.size();
        rep.bound = design_dimension_bound(X.n, e, shells.p(),
                                           shells.epsilon_S, Parity::Full);
        rep.euclidean_bound = pol_dim_full_space(X.n, e);
    } else {
        rep.bound = design_dimension_bound(X.n, e, shells.p(),
                                           shells.epsilon_S, Parity::EvenOnly);
        rep.euclidean_bound = pol_dim_star_space(X.n, e);
        if (!is_antipodal(X, tol)) {
            rep.cardinality = X.size();
            rep.classification = "not-tight";
            rep.reason = "odd strength requires an antipodal set with "
                         "symmetric weights";
            return rep;
        }
        rep.cardinality = antipodal_half(X, tol).size();
    }

    if (!rep.strength_report.is_design) {
        rep.classification = "not-tight";
        rep.reason = "not a design at the requested strength";
        return rep;
    }
    if (rep.cardinality != rep.bound) {
        rep.classification = "not-tight";
        return rep;
    }
    bool euclidean = rep.bound == rep.euclidean_bound;
    if (t % 2 == 0)
        rep.classification = euclidean ? "tight-Euclidean" : "tight-on-S";
    else
        rep.classification =
            euclidean ? "antipodal-tight-Euclidean" : "antipodal-tight-on-S";
    return rep;
}

} // namespace ed
