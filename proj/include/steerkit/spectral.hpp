#pragma once

#include <vector>

#include "steerkit/matrix.hpp"

namespace steerkit {

/// Absolute accuracy contract for extremal eigenvalues.
inline constexpr double kEigenTol = 1e-10;

struct EigenResult {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    std::vector<Complex> vec_max;  // unit eigenvector for lambda_max
};

/// Extremal eigenvalues of a Hermitian matrix via cyclic Jacobi rotations.
/// Throws NotHermitianError if the symmetry residual exceeds 1e-12.
EigenResult eig_extremal(const ComplexMatrix& h);

/// All eigenvalues, ascending. Same hermiticity contract as eig_extremal.
std::vector<double> eig_all(const ComplexMatrix& h);

}  // namespace steerkit
