#include "spadapt/expm.hpp"

#include <cmath>
#include <string>

namespace spadapt {

void ExpmConfig::validate() const {
  if (squarings < 1) throw std::invalid_argument("expm: squarings must be >= 1");
  if (!(taylor_tol > 0.0)) throw std::invalid_argument("expm: taylor_tol must be > 0");
  if (max_terms < 1) throw std::invalid_argument("expm: max_terms must be >= 1");
}

ExpmDivergence::ExpmDivergence(int level, int term, double term_norm)
    : std::runtime_error("expm_action: Taylor series did not converge at level " + std::to_string(level) +
                         ", term " + std::to_string(term) + " (term norm " + std::to_string(term_norm) + ")"),
      level_(level),
      term_(term),
      term_norm_(term_norm) {}

Eigen::VectorXcd expm_action(const LinearOperator& apply_a, const Eigen::VectorXcd& x, const ExpmConfig& config) {
  config.validate();
  const double inv_m = 1.0 / config.squarings;
  Eigen::VectorXcd current = x;
  Eigen::VectorXcd term(x.size());
  Eigen::VectorXcd next(x.size());
  for (int level = 0; level < config.squarings; ++level) {
    const double x_norm = current.norm();
    if (x_norm == 0.0) return current;
    const double tol = config.taylor_tol * x_norm;
    Eigen::VectorXcd sum = current;
    term = current;
    bool converged = false;
    double term_norm = x_norm;
    for (int k = 1; k <= config.max_terms; ++k) {
      apply_a(term, next);
      term = next * (inv_m / k);
      sum += term;
      term_norm = term.norm();
      if (!std::isfinite(term_norm)) throw ExpmDivergence(level, k, term_norm);
      if (term_norm < tol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw ExpmDivergence(level, config.max_terms, term_norm);
    current = std::move(sum);
  }
  return current;
}

}  // namespace spadapt
