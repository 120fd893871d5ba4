#include "flexshift/small_eig.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "flexshift/errors.hpp"

namespace flexshift {

GeneralizedEig small_generalized_eig(const Matrix& A, const Matrix& B) {
  const Index m = A.rows();
  if (A.cols() != m || B.rows() != m || B.cols() != m) {
    throw std::invalid_argument("small_generalized_eig: square pencil required");
  }

  Eigen::PartialPivLU<Matrix> lu(B);
  const Matrix Binv = lu.inverse();
  const double cond = B.cwiseAbs().colwise().sum().maxCoeff() *
                      Binv.cwiseAbs().colwise().sum().maxCoeff();
  if (!(cond < 1e14)) {
    throw IllConditionedReductionError(
        cond, "small_generalized_eig: B reduction too ill-conditioned");
  }

  Eigen::ComplexEigenSolver<Matrix> es(Binv * A, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("small_generalized_eig: QR iteration failed");
  }

  GeneralizedEig out;
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
  for (Index k = 0; k < m; ++k) {
    out.eigenvectors.col(k).normalize();
  }
  out.reduction_condition = cond;
  return out;
}

}  // namespace flexshift
