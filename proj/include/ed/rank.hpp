#pragma once

#include <vector>

#include <Eigen/Dense>

namespace ed {

struct RankReport {
    int rank = 0;
    int rows = 0;
    int cols = 0;
    std::vector<double> singular_values; // descending
    double threshold = 0;                // rel_tol * largest singular value
};

/// Numerical rank: number of singular values above rel_tol times the largest.
RankReport rank_analysis(const Eigen::MatrixXd& A, double rel_tol = 1e-8);
int matrix_rank(const Eigen::MatrixXd& A, double rel_tol = 1e-8);

/// Column submatrix in the given order.
Eigen::MatrixXd select_columns(const Eigen::MatrixXd& A,
                               const std::vector<int>& cols);

/// Ascending indices in [0, total) not contained in the sorted-or-not subset.
std::vector<int> complement_indices(int total, const std::vector<int>& subset);

} // namespace ed
