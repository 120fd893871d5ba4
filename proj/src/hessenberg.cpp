#include "flexshift/hessenberg.hpp"

#include <cmath>
#include <stdexcept>

#include "flexshift/errors.hpp"

namespace flexshift {

namespace {

// Complex Givens rotation zeroing b: [c, s; -conj(s), c] [a; b] = [r; 0]
// with real c. Standard zrotg-style construction.
void make_givens(Complex a, Complex b, double& c, Complex& s, Complex& r) {
  if (b == Complex(0.0, 0.0)) {
    c = 1.0;
    s = Complex(0.0, 0.0);
    r = a;
    return;
  }
  if (a == Complex(0.0, 0.0)) {
    c = 0.0;
    s = Complex(1.0, 0.0);
    r = b;
    return;
  }
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  const double abs_a = std::abs(a);
  c = abs_a / norm;
  const Complex phase = a / abs_a;
  s = phase * std::conj(b) / norm;
  r = phase * norm;
}

}  // namespace

LstsqResult hessenberg_lstsq(const Matrix& H, const Vector& rhs) {
  const Index m = H.cols();
  if (H.rows() != m + 1) {
    throw std::invalid_argument("hessenberg_lstsq: H must be (m+1) x m");
  }
  if (rhs.size() != m + 1) {
    throw std::invalid_argument("hessenberg_lstsq: rhs size mismatch");
  }

  LstsqResult out;
  if (m == 0) {
    out.y = Vector::Zero(0);
    out.residual_norm = rhs.norm();
    return out;
  }

  Matrix R = H;
  Vector g = rhs;

  for (Index k = 0; k < m; ++k) {
    double c;
    Complex s, r;
    make_givens(R(k, k), R(k + 1, k), c, s, r);
    ++out.rotations_used;
    R(k, k) = r;
    R(k + 1, k) = Complex(0.0, 0.0);
    for (Index j = k + 1; j < m; ++j) {
      const Complex t1 = R(k, j);
      const Complex t2 = R(k + 1, j);
      R(k, j) = c * t1 + s * t2;
      R(k + 1, j) = -std::conj(s) * t1 + c * t2;
    }
    const Complex t1 = g[k];
    const Complex t2 = g[k + 1];
    g[k] = c * t1 + s * t2;
    g[k + 1] = -std::conj(s) * t1 + c * t2;
  }

  const double scale = R.diagonal().cwiseAbs().maxCoeff();
  for (Index k = 0; k < m; ++k) {
    if (std::abs(R(k, k)) <= 1e3 * kEps * scale) {
      throw RankDeficientError("hessenberg_lstsq: rank-deficient column " +
                               std::to_string(k));
    }
  }

  Vector y = Vector::Zero(m);
  for (Index i = m - 1; i >= 0; --i) {
    Complex acc = g[i];
    for (Index j = i + 1; j < m; ++j) acc -= R(i, j) * y[j];
    y[i] = acc / R(i, i);
  }

  out.y = std::move(y);
  out.residual_norm = std::abs(g[m]);
  return out;
}

Vector hessenberg_solve(const Matrix& H, const Vector& rhs) {
  const Index m = H.rows();
  if (H.cols() != m) {
    throw std::invalid_argument("hessenberg_solve: H must be square");
  }
  if (rhs.size() != m) {
    throw std::invalid_argument("hessenberg_solve: rhs size mismatch");
  }

  Matrix U = H;
  Vector g = rhs;
  const double scale = std::max(U.cwiseAbs().maxCoeff(), 1.0);

  for (Index k = 0; k + 1 < m; ++k) {
    if (std::abs(U(k + 1, k)) > std::abs(U(k, k))) {
      U.row(k).tail(m - k).swap(U.row(k + 1).tail(m - k));
      std::swap(g[k], g[k + 1]);
    }
    if (std::abs(U(k, k)) <= 1e3 * kEps * scale) {
      throw SingularMatrixError(k, "hessenberg_solve: singular pivot");
    }
    const Complex mult = U(k + 1, k) / U(k, k);
    U(k + 1, k) = Complex(0.0, 0.0);
    for (Index j = k + 1; j < m; ++j) U(k + 1, j) -= mult * U(k, j);
    g[k + 1] -= mult * g[k];
  }
  if (std::abs(U(m - 1, m - 1)) <= 1e3 * kEps * scale) {
    throw SingularMatrixError(m - 1, "hessenberg_solve: singular pivot");
  }

  Vector y = Vector::Zero(m);
  for (Index i = m - 1; i >= 0; --i) {
    Complex acc = g[i];
    for (Index j = i + 1; j < m; ++j) acc -= U(i, j) * y[j];
    y[i] = acc / U(i, i);
  }
  return y;
}

}  // namespace flexshift
