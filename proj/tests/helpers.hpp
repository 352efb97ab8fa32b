#pragma once

#include <cmath>
#include <random>

#include "ed/point_set.hpp"

namespace helpers {

inline double urand(std::mt19937_64& gen) {
    return (gen() >> 11) * 0x1.0p-53; // uniform in [0,1)
}

inline ed::WeightedPointSet regular_polygon(int m, double radius = 1.0,
                                            double weight = 1.0,
                                            double phase = 0.0) {
    ed::WeightedPointSet X;
    X.n = 2;
    const double pi = std::acos(-1.0);
    for (int j = 0; j < m; ++j) {
        const double th = phase + 2.0 * pi * j / m;
        X.points.push_back(radius *
                           Eigen::Vector2d(std::cos(th), std::sin(th)));
        X.weights.push_back(weight);
    }
    return X;
}

inline ed::WeightedPointSet random_point_set(int n, int N,
                                             std::mt19937_64& gen) {
    ed::WeightedPointSet X;
    X.n = n;
    for (int u = 0; u < N; ++u) {
        Eigen::VectorXd x(n);
        for (int c = 0; c < n; ++c) x[c] = 2.0 * urand(gen) - 1.0;
        X.points.push_back(x);
        X.weights.push_back(0.2 + urand(gen));
    }
    return X;
}

} // namespace helpers
