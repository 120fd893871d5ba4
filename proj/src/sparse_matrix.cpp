#include "flexshift/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace flexshift {

SparseMatrix SparseMatrix::from_triplets(Index nrows, Index ncols,
                                         std::vector<Triplet> entries) {
  if (nrows < 0 || ncols < 0) {
    throw std::invalid_argument("SparseMatrix: negative dimensions");
  }
  for (const auto& t : entries) {
    if (t.row < 0 || t.row >= nrows || t.col < 0 || t.col >= ncols) {
      throw std::invalid_argument("SparseMatrix: triplet index out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix A;
  A.nrows_ = nrows;
  A.ncols_ = ncols;
  A.row_ptr_.assign(static_cast<size_t>(nrows) + 1, 0);
  A.col_idx_.reserve(entries.size());
  A.values_.reserve(entries.size());

  size_t i = 0;
  for (Index r = 0; r < nrows; ++r) {
    while (i < entries.size() && entries[i].row == r) {
      Index c = entries[i].col;
      Complex v = entries[i].value;
      ++i;
      while (i < entries.size() && entries[i].row == r && entries[i].col == c) {
        v += entries[i].value;
        ++i;
      }
      if (v != Complex(0.0, 0.0)) {
        A.col_idx_.push_back(c);
        A.values_.push_back(v);
      }
    }
    A.row_ptr_[static_cast<size_t>(r) + 1] = static_cast<Index>(A.col_idx_.size());
  }
  return A;
}

SparseMatrix SparseMatrix::identity(Index n) {
  std::vector<Triplet> t;
  t.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) t.push_back({i, i, Complex(1.0, 0.0)});
  return from_triplets(n, n, std::move(t));
}

SparseMatrix SparseMatrix::diagonal(const Vector& d) {
  std::vector<Triplet> t;
  t.reserve(static_cast<size_t>(d.size()));
  for (Index i = 0; i < d.size(); ++i) t.push_back({i, i, d[i]});
  return from_triplets(d.size(), d.size(), std::move(t));
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != ncols_) {
    throw std::invalid_argument("spmv: dimension mismatch");
  }
  Vector y = Vector::Zero(nrows_);
  for (Index r = 0; r < nrows_; ++r) {
    Complex acc(0.0, 0.0);
    for (Index p = row_ptr_[static_cast<size_t>(r)];
         p < row_ptr_[static_cast<size_t>(r) + 1]; ++p) {
      acc += values_[static_cast<size_t>(p)] * x[col_idx_[static_cast<size_t>(p)]];
    }
    y[r] = acc;
  }
  return y;
}

Index SparseMatrix::bandwidth() const {
  Index bw = 0;
  for (Index r = 0; r < nrows_; ++r) {
    for (Index p = row_ptr_[static_cast<size_t>(r)];
         p < row_ptr_[static_cast<size_t>(r) + 1]; ++p) {
      bw = std::max(bw, std::abs(r - col_idx_[static_cast<size_t>(p)]));
    }
  }
  return bw;
}

Matrix SparseMatrix::dense() const {
  Matrix D = Matrix::Zero(nrows_, ncols_);
  for (Index r = 0; r < nrows_; ++r) {
    for (Index p = row_ptr_[static_cast<size_t>(r)];
         p < row_ptr_[static_cast<size_t>(r) + 1]; ++p) {
      D(r, col_idx_[static_cast<size_t>(p)]) = values_[static_cast<size_t>(p)];
    }
  }
  return D;
}

SparseMatrix SparseMatrix::add_scaled(Complex alpha, const SparseMatrix& other) const {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw std::invalid_argument("add_scaled: dimension mismatch");
  }
  std::vector<Triplet> t;
  t.reserve(values_.size() + other.values_.size());
  for (Index r = 0; r < nrows_; ++r) {
    for (Index p = row_ptr_[static_cast<size_t>(r)];
         p < row_ptr_[static_cast<size_t>(r) + 1]; ++p) {
      t.push_back({r, col_idx_[static_cast<size_t>(p)], values_[static_cast<size_t>(p)]});
    }
  }
  for (Index r = 0; r < other.nrows_; ++r) {
    for (Index p = other.row_ptr_[static_cast<size_t>(r)];
         p < other.row_ptr_[static_cast<size_t>(r) + 1]; ++p) {
      t.push_back({r, other.col_idx_[static_cast<size_t>(p)],
                   alpha * other.values_[static_cast<size_t>(p)]});
    }
  }
  return from_triplets(nrows_, ncols_, std::move(t));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (Index r = 0; r < nrows_; ++r) {
    for (Index p = row_ptr_[static_cast<size_t>(r)];
         p < row_ptr_[static_cast<size_t>(r) + 1]; ++p) {
      t.push_back({col_idx_[static_cast<size_t>(p)], r, values_[static_cast<size_t>(p)]});
    }
  }
  return from_triplets(ncols_, nrows_, std::move(t));
}

Vector SparseMatrix::diagonal_vector() const {
  Vector d = Vector::Zero(std::min(nrows_, ncols_));
  for (Index r = 0; r < d.size(); ++r) {
    for (Index p = row_ptr_[static_cast<size_t>(r)];
         p < row_ptr_[static_cast<size_t>(r) + 1]; ++p) {
      if (col_idx_[static_cast<size_t>(p)] == r) {
        d[r] = values_[static_cast<size_t>(p)];
      }
    }
  }
  return d;
}

std::span<const Index> SparseMatrix::row_cols(Index i) const {
  auto begin = static_cast<size_t>(row_ptr_[static_cast<size_t>(i)]);
  auto end = static_cast<size_t>(row_ptr_[static_cast<size_t>(i) + 1]);
  return {col_idx_.data() + begin, end - begin};
}

std::span<const Complex> SparseMatrix::row_values(Index i) const {
  auto begin = static_cast<size_t>(row_ptr_[static_cast<size_t>(i)]);
  auto end = static_cast<size_t>(row_ptr_[static_cast<size_t>(i) + 1]);
  return {values_.data() + begin, end - begin};
}

Vector spmv(const SparseMatrix& A, const Vector& x) { return A.apply(x); }

SparseMatrix shifted_sum(const SparseMatrix& K, Complex tau, const SparseMatrix& M) {
  return K.add_scaled(tau, M);
}

}  // namespace flexshift
