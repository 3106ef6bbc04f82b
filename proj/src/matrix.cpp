#include "covelm/matrix.hpp"

#include <cmath>
#include <string>

namespace covelm {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty())
        throw InvalidInput("matmul: empty operand");
    if (a.cols != b.rows)
        throw InvalidInput("matmul: inner dimensions differ (" + std::to_string(a.cols) +
                           " vs " + std::to_string(b.rows) + ")");
    Matrix c(a.rows, b.cols, 0.0);
    const int n = a.rows, k = a.cols, m = b.cols;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double* ar = a.row_ptr(i);
        double* cr = c.row_ptr(i);
        for (int p = 0; p < k; ++p) {
            const double av = ar[p];
            const double* br = b.row_ptr(p);
            for (int j = 0; j < m; ++j) cr[j] += av * br[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    if (m.empty()) throw InvalidInput("transpose: empty matrix");
    Matrix t(m.cols, m.rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

double max_abs(const Matrix& m) {
    double v = 0.0;
    for (double x : m.data) v = std::max(v, std::abs(x));
    return v;
}

void require_finite(const Matrix& m, const char* what) {
    for (double x : m.data)
        if (!std::isfinite(x))
            throw InvalidInput(std::string(what) + ": non-finite entry");
}

}  // namespace covelm
