#pragma once

#include <vector>

#include "flexshift/sparse_matrix.hpp"
#include "flexshift/types.hpp"

namespace flexshift {

/// In-place LU factorization of a banded matrix with partial pivoting.
///
/// Storage follows the LAPACK band layout: entry (i, j) sits at
/// ab(kl + ku + i - j, j), with kl extra rows of fill space on top for the
/// pivoting. kl = ku = bandwidth of the input matrix.
class BandedLU {
 public:
  /// Factors A, which must have every entry within the declared bandwidth.
  /// Throws SingularMatrixError on an exactly singular pivot column.
  static BandedLU factor(const SparseMatrix& A, Index bandwidth);

  /// Convenience overload using the matrix's own bandwidth.
  static BandedLU factor(const SparseMatrix& A);

  Vector solve(const Vector& b) const;

  Index size() const { return n_; }
  Index bandwidth() const { return kl_; }

 private:
  Index n_ = 0;
  Index kl_ = 0;  // = ku_
  Matrix ab_;     // (3*kl + 1) x n
  std::vector<Index> pivots_;
};

}  // namespace flexshift
