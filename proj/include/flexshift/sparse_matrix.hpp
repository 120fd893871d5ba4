#pragma once

#include <span>
#include <vector>

#include "flexshift/types.hpp"

namespace flexshift {

/// Row-compressed complex sparse matrix.
///
/// Column indices are strictly increasing within each row and no explicit
/// zeros are stored. Products are accumulated in ascending column order so
/// results are reproducible run to run.
class SparseMatrix {
 public:
  struct Triplet {
    Index row;
    Index col;
    Complex value;
  };

  SparseMatrix() = default;

  /// Builds from (row, col, value) entries; duplicates are summed, entries
  /// that cancel to zero are dropped.
  static SparseMatrix from_triplets(Index nrows, Index ncols,
                                    std::vector<Triplet> entries);

  static SparseMatrix identity(Index n);

  /// Diagonal matrix from a complex vector.
  static SparseMatrix diagonal(const Vector& d);

  Index rows() const { return nrows_; }
  Index cols() const { return ncols_; }
  Index nonzeros() const { return static_cast<Index>(values_.size()); }

  /// y = A x with deterministic per-row summation order.
  Vector apply(const Vector& x) const;

  /// Max |i - j| over stored entries; 0 for diagonal or empty matrices.
  Index bandwidth() const;

  Matrix dense() const;

  /// A + alpha * B on the union sparsity pattern.
  SparseMatrix add_scaled(Complex alpha, const SparseMatrix& other) const;

  SparseMatrix transpose() const;

  Vector diagonal_vector() const;

  std::span<const Index> row_cols(Index i) const;
  std::span<const Complex> row_values(Index i) const;

  const std::vector<Index>& row_ptr() const { return row_ptr_; }
  const std::vector<Index>& col_idx() const { return col_idx_; }
  const std::vector<Complex>& values() const { return values_; }

 private:
  Index nrows_ = 0;
  Index ncols_ = 0;
  std::vector<Index> row_ptr_{0};
  std::vector<Index> col_idx_;
  std::vector<Complex> values_;
};

/// Sparse matrix-vector product; fatal argument error on dimension mismatch.
Vector spmv(const SparseMatrix& A, const Vector& x);

/// K + tau * M, the shifted operator every preconditioner factorizes.
SparseMatrix shifted_sum(const SparseMatrix& K, Complex tau,
                         const SparseMatrix& M);

}  // namespace flexshift
