#include "ed/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ed/errors.hpp"
#include "ed/rational.hpp"

namespace ed {

void validate(const WeightedPointSet& X) {
    if (X.n < 1) throw Error("point set: ambient dimension must be >= 1");
    if (X.points.empty()) throw Error("point set: at least one point required");
    if (X.points.size() != X.weights.size())
        throw Error("point set: points/weights length mismatch");
    for (const auto& p : X.points)
        if (p.size() != X.n) throw Error("point set: point dimension mismatch");
    for (double w : X.weights)
        if (!(w > 0)) throw Error("point set: weights must be positive");
    for (size_t i = 0; i < X.points.size(); ++i)
        for (size_t j = i + 1; j < X.points.size(); ++j)
            if ((X.points[i] - X.points[j]).cwiseAbs().maxCoeff() < 1e-12)
                throw Error("point set: coincident points");
}

ShellDecomposition decompose_shells(const WeightedPointSet& X,
                                    double group_tol) {
    if (!(group_tol > 0)) throw Error("decompose_shells: group_tol must be > 0");
    const int N = X.size();
    std::vector<double> norms(N);
    for (int i = 0; i < N; ++i) norms[i] = X.points[i].norm();
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return norms[a] < norms[b]; });

    ShellDecomposition d;
    d.membership.assign(N, -1);
    int start = 0;
    while (start < N) {
        int end = start + 1;
        while (end < N &&
               norms[order[end]] - norms[order[end - 1]] < group_tol)
            ++end;
        double lo = norms[order[start]], hi = norms[order[end - 1]];
        if (hi - lo >= group_tol)
            throw Error("decompose_shells: ambiguous clustering, norms "
                        "straddle the grouping tolerance");
        double wsum = 0, rsum = 0;
        for (int k = start; k < end; ++k) {
            d.membership[order[k]] = d.p();
            wsum += X.weights[order[k]];
            rsum += norms[order[k]];
        }
        d.radii.push_back(rsum / (end - start));
        d.shell_weights.push_back(wsum);
        start = end;
    }
    d.epsilon_S = 0;
    for (double r : d.radii)
        if (r < group_tol) d.epsilon_S = 1;
    return d;
}

bool is_antipodal(const WeightedPointSet& X, double tol) {
    const int N = X.size();
    std::vector<bool> used(N, false);
    for (int i = 0; i < N; ++i) {
        if (used[i]) continue;
        if (X.points[i].norm() <= tol) {
            used[i] = true; // origin is self-paired
            continue;
        }
        bool matched = false;
        for (int j = 0; j < N; ++j) {
            if (j == i || used[j]) continue;
            if ((X.points[i] + X.points[j]).norm() <= tol &&
                std::abs(X.weights[i] - X.weights[j]) <= tol) {
                used[i] = used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

WeightedPointSet antipodal_half(const WeightedPointSet& X, double tol) {
    if (!is_antipodal(X, tol))
        throw Error("antipodal_half: point set is not antipodal");
    const int N = X.size();
    WeightedPointSet half;
    half.n = X.n;
    std::vector<bool> used(N, false);
    for (int i = 0; i < N; ++i) {
        if (used[i]) continue;
        used[i] = true;
        half.points.push_back(X.points[i]);
        half.weights.push_back(X.weights[i]);
        if (X.points[i].norm() <= tol) continue;
        for (int j = i + 1; j < N; ++j) {
            if (!used[j] && (X.points[i] + X.points[j]).norm() <= tol) {
                used[j] = true;
                break;
            }
        }
    }
    return half;
}

InnerProductProfile inner_product_set_profile(const WeightedPointSet& X,
                                              double tol) {
    const int N = X.size();
    if (N < 2)
        throw Error("inner_product_set_profile: need at least two points");
    std::vector<double> prods;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            prods.push_back(X.points[i].dot(X.points[j]));
    std::sort(prods.begin(), prods.end());
    InnerProductProfile prof;
    size_t start = 0;
    while (start < prods.size()) {
        size_t end = start + 1;
        while (end < prods.size() && prods[end] - prods[end - 1] < tol) ++end;
        double avg = 0;
        for (size_t k = start; k < end; ++k) avg += prods[k];
        prof.values.push_back(avg / (end - start));
        start = end;
    }
    prof.e = static_cast<int>(prof.values.size());
    prof.cardinality_bound = binomial(X.n + prof.e, prof.e).get_si();
    prof.bound_satisfied = N <= prof.cardinality_bound;
    return prof;
}

} // namespace ed
