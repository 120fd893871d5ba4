#pragma once

#include <stdexcept>
#include <string>

#include "flexshift/types.hpp"

namespace flexshift {

/// Exactly singular pivot during a direct factorization.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(Index pivot, const std::string& what)
      : std::runtime_error(what), pivot_(pivot) {}
  Index pivot() const { return pivot_; }

 private:
  Index pivot_;
};

/// Least-squares matrix lost full column rank.
class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduction B^{-1}A is too ill-conditioned to trust the eigensolve.
class IllConditionedReductionError : public std::runtime_error {
 public:
  IllConditionedReductionError(double condition, const std::string& what)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// H_m(sigma;T_m) singular for one shift; other shifts are unaffected.
class FomSingularError : public std::runtime_error {
 public:
  FomSingularError(Complex sigma, const std::string& what)
      : std::runtime_error(what), sigma_(sigma) {}
  Complex sigma() const { return sigma_; }

 private:
  Complex sigma_;
};

/// Inner iterative solver stopped making progress; carries the best iterate.
class InnerStagnationError : public std::runtime_error {
 public:
  InnerStagnationError(Vector best, double residual, const std::string& what)
      : std::runtime_error(what), best_(std::move(best)), residual_(residual) {}
  const Vector& best_iterate() const { return best_; }
  double best_residual() const { return residual_; }

 private:
  Vector best_;
  double residual_;
};

/// Saddle-point system of the Gauss-Newton step is singular (JX rank loss).
class SaddleSingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested a feature combination that is deliberately not provided.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flexshift
