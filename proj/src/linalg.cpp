#include "covelm/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "covelm/error.hpp"

namespace covelm {

namespace {
using RowMajorXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
}

Matrix pinv(const Matrix& m, double tol) {
    if (m.empty()) throw InvalidInput("pinv: empty matrix");
    if (tol < 0.0) throw InvalidInput("pinv: tolerance must be nonnegative");
    require_finite(m, "pinv");

    Eigen::Map<const RowMajorXd> a(m.data.data(), m.rows, m.cols);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
        throw NumericalFailure("pinv: SVD did not converge");

    const auto& sigma = svd.singularValues();
    const int k = int(sigma.size());
    const double cutoff = k > 0 ? tol * sigma(0) : 0.0;

    // V scaled by the inverted spectrum, then composed with U^T through the
    // project's own deterministic matmul.
    Matrix vs(m.cols, k);
    const auto& v = svd.matrixV();
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < k; ++j)
            vs(i, j) = sigma(j) > cutoff ? v(i, j) / sigma(j) : 0.0;

    Matrix ut(k, m.rows);
    const auto& u = svd.matrixU();
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m.rows; ++i) ut(j, i) = u(i, j);

    return matmul(vs, ut);
}

Matrix least_squares_solve(const Matrix& g, const Matrix& t) {
    if (g.rows != t.rows)
        throw InvalidInput("least_squares_solve: G and T row counts differ");
    return matmul(pinv(g), t);
}

}  // namespace covelm
