#include "ed/rank.hpp"

#include <algorithm>

#include "ed/errors.hpp"

namespace ed {

RankReport rank_analysis(const Eigen::MatrixXd& A, double rel_tol) {
    RankReport rep;
    rep.rows = static_cast<int>(A.rows());
    rep.cols = static_cast<int>(A.cols());
    if (A.rows() == 0 || A.cols() == 0) return rep;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    rep.singular_values.assign(sv.data(), sv.data() + sv.size());
    rep.threshold = rel_tol * sv[0];
    for (double s : rep.singular_values)
        if (s > rep.threshold) ++rep.rank;
    return rep;
}

int matrix_rank(const Eigen::MatrixXd& A, double rel_tol) {
    return rank_analysis(A, rel_tol).rank;
}

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& A,
                               const std::vector<int>& cols) {
    Eigen::MatrixXd B(A.rows(), static_cast<int>(cols.size()));
    for (size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] < 0 || cols[k] >= A.cols())
            throw Error("column index out of range");
        B.col(static_cast<int>(k)) = A.col(cols[k]);
    }
    return B;
}

std::vector<int> complement_indices(int total, const std::vector<int>& subset) {
    std::vector<bool> in(total, false);
    for (int c : subset) {
        if (c < 0 || c >= total) throw Error("index out of range");
        in[c] = true;
    }
    std::vector<int> out;
    out.reserve(total - static_cast<int>(subset.size()));
    for (int i = 0; i < total; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

} // namespace ed
