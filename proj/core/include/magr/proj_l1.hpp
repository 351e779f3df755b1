#pragma once

#include <cstddef>
#include <vector>

#include "magr/dense_matrix.hpp"

namespace magr {

// Euclidean projection onto the l1 ball of radius eps, by the sort-based
// rule: sort |v| descending into mu, take
//   rho   = max { i : mu_i > (sum_{r<=i} mu_r - eps) / i },
//   theta = (sum_{r<=rho} mu_r - eps) / rho,
//   w_i   = sgn(v_i) * max(|v_i| - theta, 0).
// Inputs already inside the ball are returned unchanged with theta = 0
// and rho = 0. O(m log m) per vector.

struct ProjectionResult {
    DenseMatrix w;                  // projected values, same shape as input
    std::vector<double> theta;      // shrinkage threshold per column/segment
    std::vector<std::size_t> rho;   // active-set size per column/segment
};

struct VectorProjection {
    std::vector<double> w;
    double theta = 0.0;
    std::size_t rho = 0;
};

VectorProjection project_l1_vector(const std::vector<double>& v, double eps = 1.0);

// Column-wise projection; column j of the result equals
// project_l1_vector(column j, eps).
ProjectionResult project_l1_columns(const DenseMatrix& v, double eps = 1.0);

// Projects each contiguous length-d segment of every column
// independently. Segment s of column j covers rows [s*d, (s+1)*d); its
// theta/rho entry lives at index j*(m/d) + s. group_size must divide the
// row count; group_size == m reproduces project_l1_columns.
ProjectionResult project_l1_grouped(const DenseMatrix& v, std::size_t group_size,
                                    double eps = 1.0);

// prox_{t * max-norm}(v) per column, via the Moreau decomposition
//   prox(v) = v - t * proj_{l1 ball}(v / t).
DenseMatrix prox_linf_columns(const DenseMatrix& v, double t);

// Segment-wise variant matching project_l1_grouped's layout.
DenseMatrix prox_linf_grouped(const DenseMatrix& v, std::size_t group_size, double t);

}  // namespace magr
