#pragma once

#include "covelm/matrix.hpp"

namespace covelm {

/// Relative singular-value cutoff used by default: sigma_i > tol * sigma_max
/// are inverted, the rest zeroed.
inline constexpr double kPinvDefaultTol = 1e-12;

/// Moore-Penrose generalized inverse via SVD. Satisfies the four Penrose
/// conditions to numerical tolerance, including rank-deficient inputs.
Matrix pinv(const Matrix& m, double tol = kPinvDefaultTol);

/// Minimum-norm least-squares solution of G * beta = T, i.e. pinv(G) * T.
Matrix least_squares_solve(const Matrix& g, const Matrix& t);

}  // namespace covelm
