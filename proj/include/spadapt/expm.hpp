#pragma once

#include <functional>
#include <stdexcept>

#include <Eigen/Core>

namespace spadapt {

struct ExpmConfig {
  int squarings = 6;         // m: exp(A) x = (exp(A/m))^m x
  double taylor_tol = 1e-15;  // stop when ||term|| < taylor_tol * ||x||
  int max_terms = 40;         // Taylor terms per level before giving up

  void validate() const;
};

/// y = A x for a fixed-dimension linear A. `y` is sized by the caller.
using LinearOperator = std::function<void(const Eigen::VectorXcd& x, Eigen::VectorXcd& y)>;

/// Raised when the Taylor series of exp(A/m) x has not converged after
/// max_terms terms.
class ExpmDivergence : public std::runtime_error {
 public:
  ExpmDivergence(int level, int term, double term_norm);
  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] int term() const noexcept { return term_; }
  [[nodiscard]] double term_norm() const noexcept { return term_norm_; }

 private:
  int level_;
  int term_;
  double term_norm_;
};

/// exp(A) x by m sequential applications of the truncated Taylor series of
/// exp(A/m). Summation order is fixed, so results are reproducible.
Eigen::VectorXcd expm_action(const LinearOperator& apply_a, const Eigen::VectorXcd& x, const ExpmConfig& config = {});

}  // namespace spadapt
