#pragma once

#include "flexshift/types.hpp"

namespace flexshift {

struct GeneralizedEig {
  Vector eigenvalues;    // theta_1 .. theta_m
  Matrix eigenvectors;   // columns f_k, unit 2-norm
  double reduction_condition = 0.0;  // 1-norm condition estimate of B
};

/// Solves A f = theta B f for small dense pencils by explicit reduction to
/// the standard problem B^{-1} A followed by a shifted-QR eigensolve.
/// Throws IllConditionedReductionError when cond_1(B) exceeds 1e14.
GeneralizedEig small_generalized_eig(const Matrix& A, const Matrix& B);

}  // namespace flexshift
