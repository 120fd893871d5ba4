#include "flexshift/banded_lu.hpp"

#include <algorithm>
#include <stdexcept>

#include "flexshift/errors.hpp"

namespace flexshift {

BandedLU BandedLU::factor(const SparseMatrix& A, Index bandwidth) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("BandedLU: matrix must be square");
  }
  if (A.bandwidth() > bandwidth) {
    throw std::invalid_argument("BandedLU: entry outside declared bandwidth");
  }
  const Index n = A.rows();
  const Index kl = bandwidth;
  const Index ku = bandwidth;

  BandedLU f;
  f.n_ = n;
  f.kl_ = kl;
  f.ab_ = Matrix::Zero(2 * kl + ku + 1, n);
  f.pivots_.assign(static_cast<size_t>(n), 0);

  auto& ab = f.ab_;
  for (Index i = 0; i < n; ++i) {
    auto cols = A.row_cols(i);
    auto vals = A.row_values(i);
    for (size_t p = 0; p < cols.size(); ++p) {
      ab(kl + ku + i - cols[p], cols[p]) = vals[p];
    }
  }

  // Unblocked band LU with partial pivoting; pivoting can widen U to kl + ku.
  for (Index j = 0; j < n; ++j) {
    const Index km = std::min(kl, n - 1 - j);  // subdiagonal count in column j
    Index jp = 0;
    double best = std::abs(ab(kl + ku, j));
    for (Index t = 1; t <= km; ++t) {
      double cand = std::abs(ab(kl + ku + t, j));
      if (cand > best) {
        best = cand;
        jp = t;
      }
    }
    f.pivots_[static_cast<size_t>(j)] = j + jp;
    if (best == 0.0) {
      throw SingularMatrixError(j, "BandedLU: exactly singular pivot column");
    }
    const Index ju = std::min(j + kl + ku, n - 1);
    if (jp != 0) {
      for (Index c = j; c <= ju; ++c) {
        std::swap(ab(kl + ku + j - c, c), ab(kl + ku + j + jp - c, c));
      }
    }
    const Complex piv = ab(kl + ku, j);
    for (Index t = 1; t <= km; ++t) {
      ab(kl + ku + t, j) /= piv;
    }
    for (Index c = j + 1; c <= ju; ++c) {
      const Complex ujc = ab(kl + ku + j - c, c);
      if (ujc != Complex(0.0, 0.0)) {
        for (Index t = 1; t <= km; ++t) {
          ab(kl + ku + j + t - c, c) -= ab(kl + ku + t, j) * ujc;
        }
      }
    }
  }
  return f;
}

BandedLU BandedLU::factor(const SparseMatrix& A) {
  return factor(A, A.bandwidth());
}

Vector BandedLU::solve(const Vector& b) const {
  if (b.size() != n_) {
    throw std::invalid_argument("BandedLU::solve: dimension mismatch");
  }
  const Index kl = kl_;
  const Index ku = kl_;
  Vector x = b;

  for (Index j = 0; j < n_; ++j) {
    const Index piv = pivots_[static_cast<size_t>(j)];
    if (piv != j) std::swap(x[j], x[piv]);
    const Index km = std::min(kl, n_ - 1 - j);
    for (Index t = 1; t <= km; ++t) {
      x[j + t] -= ab_(kl + ku + t, j) * x[j];
    }
  }
  for (Index i = n_ - 1; i >= 0; --i) {
    const Index cend = std::min(i + kl + ku, n_ - 1);
    Complex acc = x[i];
    for (Index c = i + 1; c <= cend; ++c) {
      acc -= ab_(kl + ku + i - c, c) * x[c];
    }
    x[i] = acc / ab_(kl + ku, i);
  }
  return x;
}

}  // namespace flexshift
