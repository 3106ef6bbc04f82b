#pragma once

#include <cstddef>
#include <vector>

#include "covelm/error.hpp"

namespace covelm {

/// Dense real matrix, row-major, 64-bit floats.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;

    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data() {
        if (r <= 0 || c <= 0)
            throw InvalidInput("Matrix: dimensions must be positive");
        data.assign(static_cast<std::size_t>(r) * c, fill);
    }

    double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    const double* row_ptr(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }
    double* row_ptr(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }

    bool empty() const { return data.empty(); }

    static Matrix identity(int n) {
        Matrix m(n, n, 0.0);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

/// C = A * B. Parallel over output rows; each entry is accumulated in a fixed
/// k-order by a single thread, so the result is bitwise independent of the
/// thread count.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

double max_abs(const Matrix& m);

/// Throws InvalidInput if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

}  // namespace covelm
