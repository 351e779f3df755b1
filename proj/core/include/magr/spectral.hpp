#pragma once

#include <cstdint>
#include <vector>

#include "magr/dense_matrix.hpp"
#include "magr/rng.hpp"
#include "magr/tensor_io.hpp"

namespace magr {

struct SpectralEstimate {
    double lambda_max = 0.0;  // largest eigenvalue of a symmetric PSD matrix
    std::size_t iterations_used = 0;
    bool converged = false;
};

// H = X^T X, symmetrized exactly (upper triangle computed once and
// mirrored). Throws capacity_error when the m x m result would exceed
// memory_cap bytes.
DenseMatrix gram(const DenseMatrix& x, std::size_t memory_cap = kDefaultMemoryCap);

// Largest eigenvalue of a symmetric PSD matrix by power iteration with a
// deterministic start vector. Convergence criterion: relative change of
// the Rayleigh quotient over one step <= tol.
SpectralEstimate power_iteration(const DenseMatrix& h, double tol = 1e-10,
                                 std::size_t max_iter = 1000,
                                 std::uint64_t seed = kDefaultSeed);

// Eigenvalues of a symmetric matrix, descending, via cyclic Jacobi sweeps.
std::vector<double> jacobi_eigenvalues(const DenseMatrix& h, double tol = 1e-14,
                                       std::size_t max_sweeps = 64);

// Singular values of X, descending, computed from the eigendecomposition
// of the smaller Gram matrix (X^T X or X X^T). Negative round-off
// eigenvalues are clamped to zero.
std::vector<double> singular_values(const DenseMatrix& x);

// Fraction of singular values exceeding rel_threshold * sigma_max, out of
// min(rows, cols). An all-zero X yields 0.
double fraction_rank(const DenseMatrix& x, double rel_threshold = 0.01);

}  // namespace magr
