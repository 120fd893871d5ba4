#pragma once

#include <complex>

#include <Eigen/Dense>

namespace flexshift {

using Complex = std::complex<double>;
using Index = Eigen::Index;

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kEps = 2.220446049250313e-16;

}  // namespace flexshift
