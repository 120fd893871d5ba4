#pragma once

#include "flexshift/types.hpp"

namespace flexshift {

struct LstsqResult {
  Vector y;
  double residual_norm = 0.0;
  Index rotations_used = 0;
};

/// Solves min ||rhs - H y||_2 for an (m+1) x m upper Hessenberg H by Givens
/// QR, one rotation per column. Also returns the attained residual norm.
/// Throws RankDeficientError if H loses full column rank.
LstsqResult hessenberg_lstsq(const Matrix& H, const Vector& rhs);

/// Solves the square upper Hessenberg system H y = rhs by Gaussian
/// elimination with partial pivoting (only one subdiagonal to consider).
/// Throws SingularMatrixError on a numerically vanishing pivot.
Vector hessenberg_solve(const Matrix& H, const Vector& rhs);

}  // namespace flexshift
