#include "spadapt/basis.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "spadapt/kernels.hpp"

namespace spadapt {

namespace {

constexpr double kPi = std::numbers::pi;
// Rescale threshold for the scaled recurrences; 1e100 leaves room for the
// envelope factor without under/overflow of the product.
constexpr double kBig = 1e100;
const double kLogBig = std::log(kBig);

// Orthonormal three-term recurrence for a weight function:
//   x p_k = s_{k+1} p_{k+1} + a_k p_k + s_k p_{k-1},  p_0 = 1 / sqrt(mu0).
struct Recurrence {
  std::vector<double> diag;  // a_0 .. a_n
  std::vector<double> off;   // s_0 (unused) .. s_n
  double mu0 = 1.0;
};

Recurrence hermite_recurrence(int n) {
  Recurrence r;
  r.diag.assign(n + 1, 0.0);
  r.off.resize(n + 1);
  for (int k = 0; k <= n; ++k) r.off[k] = std::sqrt(0.5 * k);
  r.mu0 = std::sqrt(kPi);
  return r;
}

Recurrence laguerre_recurrence(int n, double alpha) {
  Recurrence r;
  r.diag.resize(n + 1);
  r.off.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    r.diag[k] = 2.0 * k + alpha + 1.0;
    r.off[k] = std::sqrt(k * (k + alpha));
  }
  r.mu0 = std::tgamma(alpha + 1.0);
  return r;
}

double jacobi_mu0(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

Recurrence jacobi_recurrence(int n, double a, double b) {
  Recurrence r;
  r.diag.resize(n + 1);
  r.off.resize(n + 1);
  const double ab = a + b;
  for (int k = 0; k <= n; ++k) {
    const double c = 2.0 * k + ab;
    if (k == 0) {
      r.diag[k] = (b - a) / (ab + 2.0);
      r.off[k] = 0.0;
      continue;
    }
    r.diag[k] = (b * b - a * a) / (c * (c + 2.0));
    double bk;
    if (k == 1) {
      bk = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      bk = 4.0 * k * (k + a) * (k + b) * (k + ab) / (c * c * (c + 1.0) * (c - 1.0));
    }
    r.off[k] = std::sqrt(bk);
  }
  r.mu0 = jacobi_mu0(a, b);
  return r;
}

struct OrthoEval {
  double p = 0.0;   // p_n, up to a positive common scale with dp
  double dp = 0.0;
  double log_christoffel = 0.0;  // log sum_{k<n} p_k(x)^2
};

OrthoEval evaluate_orthonormal(const Recurrence& r, int n, double x) {
  double scale_log = -0.5 * std::log(r.mu0);
  double p_prev = 0.0, p = 1.0, dp_prev = 0.0, dp = 0.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    const double p_next = ((x - r.diag[k]) * p - r.off[k] * p_prev) / r.off[k + 1];
    const double dp_next = (p + (x - r.diag[k]) * dp - r.off[k] * dp_prev) / r.off[k + 1];
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
    if (k + 1 < n) sum += p * p;
    if (std::abs(p) > kBig || std::abs(dp) > kBig) {
      p /= kBig;
      p_prev /= kBig;
      dp /= kBig;
      dp_prev /= kBig;
      sum /= kBig * kBig;
      scale_log += kLogBig;
    }
  }
  return {p, dp, std::log(sum) + 2.0 * scale_log};
}

// Gauss nodes of the weight behind `r` with n points and their
// log-Christoffel sums; weights are exp(-log_christoffel).
struct GaussNodes {
  std::vector<double> nodes;
  std::vector<double> log_christoffel;
};

GaussNodes gauss_nodes(const Recurrence& r, int n) {
  GaussNodes g;
  if (n == 0) return g;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) diag[k] = r.diag[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = r.off[k];
  std::vector<double> x(n);
  if (n == 1) {
    x[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("gauss_nodes: tridiagonal eigenvalue solve failed");
    }
    for (int k = 0; k < n; ++k) x[k] = solver.eigenvalues()[k];
  }
  g.nodes.resize(n);
  g.log_christoffel.resize(n);
  // one Newton step on p_n
  for (int j = 0; j < n; ++j) {
    const OrthoEval e = evaluate_orthonormal(r, n, x[j]);
    double xj = x[j];
    if (e.dp != 0.0 && std::isfinite(e.p / e.dp)) xj -= e.p / e.dp;
    g.nodes[j] = xj;
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  for (int j = 0; j < n; ++j) g.log_christoffel[j] = evaluate_orthonormal(r, n, g.nodes[j]).log_christoffel;
  return g;
}

// --- standard (beta = 1, x_L = 0) rules -----------------------------------

QuadratureRule chebyshev_lobatto(int order) {
  QuadratureRule q;
  if (order == 0) {
    q.nodes = {0.0};
    q.weights = {kPi};
    return q;
  }
  q.nodes.resize(order + 1);
  q.weights.assign(order + 1, kPi / order);
  for (int j = 0; j <= order; ++j) q.nodes[j] = -std::cos(kPi * j / order);
  // exact symmetric values
  for (int j = 0; j <= order; ++j) {
    if (2 * j == order) q.nodes[j] = 0.0;
  }
  q.weights.front() = q.weights.back() = 0.5 * kPi / order;
  return q;
}

QuadratureRule jacobi_lobatto(int order, double a, double b) {
  QuadratureRule q;
  const double mu0 = jacobi_mu0(a, b);
  if (order == 0) {
    q.nodes = {(b - a) / (a + b + 2.0)};
    q.weights = {mu0};
    return q;
  }
  const int interior = order - 1;
  q.nodes.resize(order + 1);
  q.weights.resize(order + 1);
  q.nodes.front() = -1.0;
  q.nodes.back() = 1.0;
  if (interior > 0) {
    const GaussNodes g = gauss_nodes(jacobi_recurrence(interior, a + 1.0, b + 1.0), interior);
    for (int j = 0; j < interior; ++j) {
      const double x = g.nodes[j];
      q.nodes[j + 1] = x;
      q.weights[j + 1] = std::exp(-g.log_christoffel[j]) / (1.0 - x * x);
    }
  }
  // closed-form endpoint weights; mu0 minus the interior sum loses ~N^2 ulps
  const double n = order;
  const double common = (a + b + 1.0) * std::log(2.0) + std::lgamma(n) - std::lgamma(n + a + b + 2.0);
  q.weights.front() =
      (b + 1.0) * std::exp(common + 2.0 * std::lgamma(b + 1.0) + std::lgamma(n + a + 1.0) - std::lgamma(n + b + 1.0));
  q.weights.back() =
      (a + 1.0) * std::exp(common + 2.0 * std::lgamma(a + 1.0) + std::lgamma(n + b + 1.0) - std::lgamma(n + a + 1.0));
  return q;
}

QuadratureRule laguerre_radau(int order, double alpha) {
  QuadratureRule q;
  const double mu0 = std::tgamma(alpha + 1.0);
  q.nodes.resize(order + 1);
  q.weights.resize(order + 1);
  q.nodes[0] = 0.0;
  if (order == 0) {
    q.weights[0] = mu0;
    return q;
  }
  const GaussNodes g = gauss_nodes(laguerre_recurrence(order, alpha + 1.0), order);
  for (int j = 0; j < order; ++j) {
    const double y = g.nodes[j];
    // polynomial weight lambda_j / y_j; function weight multiplies by e^{y}
    q.nodes[j + 1] = y;
    q.weights[j + 1] = std::exp(y - g.log_christoffel[j]) / y;
  }
  q.weights[0] = (alpha + 1.0) * std::exp(2.0 * std::lgamma(alpha + 1.0) + std::lgamma(order + 1.0) -
                                          std::lgamma(order + alpha + 2.0));
  return q;
}

QuadratureRule hermite_gauss(int order) {
  const GaussNodes g = gauss_nodes(hermite_recurrence(order + 1), order + 1);
  QuadratureRule q;
  q.nodes = g.nodes;
  q.weights.resize(order + 1);
  for (int j = 0; j <= order; ++j) {
    // symmetrize to remove eigen-solver noise
    const double x = 0.5 * (g.nodes[j] - g.nodes[order - j]);
    q.nodes[j] = x;
  }
  for (int j = 0; j <= order; ++j) {
    q.weights[j] = std::exp(q.nodes[j] * q.nodes[j] - g.log_christoffel[j]);
  }
  for (int j = 0; j <= order / 2; ++j) {
    const double w = 0.5 * (q.weights[j] + q.weights[order - j]);
    q.weights[j] = q.weights[order - j] = w;
  }
  return q;
}

QuadratureRule standard_rule(const BasisDescriptor& d) {
  switch (d.family) {
    case Family::Chebyshev: return chebyshev_lobatto(d.order);
    case Family::Legendre: return jacobi_lobatto(d.order, 0.0, 0.0);
    case Family::Jacobi: return jacobi_lobatto(d.order, d.a, d.b);
    case Family::LaguerreFn: return laguerre_radau(d.order, d.a);
    case Family::HermiteFn: return hermite_gauss(d.order);
  }
  throw std::logic_error("standard_rule: unknown family");
}

// --- evaluation in standard coordinates -------------------------------------

// Polynomial families: P_{n+1} = (A_n x + B_n) P_n - C_n P_{n-1}.
struct PolyStep {
  double A, B, C;
};

PolyStep poly_step(const BasisDescriptor& d, int n) {
  switch (d.family) {
    case Family::Chebyshev:
      return n == 0 ? PolyStep{1.0, 0.0, 0.0} : PolyStep{2.0, 0.0, 1.0};
    case Family::Legendre:
      return {(2.0 * n + 1.0) / (n + 1.0), 0.0, static_cast<double>(n) / (n + 1.0)};
    case Family::Jacobi: {
      const double a = d.a, b = d.b;
      if (n == 0) return {0.5 * (a + b + 2.0), 0.5 * (a - b), 0.0};
      const double c = 2.0 * n + a + b;
      const double den = 2.0 * (n + 1.0) * (n + a + b + 1.0) * c;
      return {(c + 1.0) * (c + 2.0) * c / den, (c + 1.0) * (a * a - b * b) / den,
              2.0 * (n + a) * (n + b) * (c + 2.0) / den};
    }
    default: break;
  }
  throw std::logic_error("poly_step: not a polynomial family");
}

void eval_polynomials(const BasisDescriptor& d, double x, std::span<double> v, std::span<double> dv) {
  const int n = d.order;
  v[0] = 1.0;
  if (!dv.empty()) dv[0] = 0.0;
  double prev = 0.0, dprev = 0.0;
  for (int k = 0; k < n; ++k) {
    const PolyStep s = poly_step(d, k);
    v[k + 1] = (s.A * x + s.B) * v[k] - s.C * prev;
    if (!dv.empty()) {
      dv[k + 1] = s.A * v[k] + (s.A * x + s.B) * dv[k] - s.C * dprev;
      dprev = dv[k];
    }
    prev = v[k];
  }
}

// Orthonormal Hermite functions h_0..h_n at xi.
void eval_hermite_functions(int n, double xi, std::span<double> out) {
  double scale_log = -0.5 * xi * xi - 0.25 * std::log(kPi);
  double factor = std::exp(scale_log);
  double prev = 0.0, cur = 1.0;
  out[0] = factor;
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * xi * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      scale_log += kLogBig;
      factor = std::exp(scale_log);
    }
    out[k + 1] = cur * factor;
  }
}

// Laguerre functions l_k(y) = c_k L_k^{(alpha)}(y) e^{-y/2}, orthonormal
// against y^alpha dy, for k = 0..n.
void eval_laguerre_functions(int n, double alpha, double y, std::span<double> out) {
  double scale_log = -0.5 * y - 0.5 * std::lgamma(alpha + 1.0);
  double factor = std::exp(scale_log);
  double prev = 0.0, cur = 1.0;
  out[0] = factor;
  for (int k = 0; k < n; ++k) {
    const double next = ((2.0 * k + alpha + 1.0 - y) * cur - std::sqrt(k * (k + alpha)) * prev) /
                        std::sqrt((k + 1.0) * (k + alpha + 1.0));
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      scale_log += kLogBig;
      factor = std::exp(scale_log);
    }
    out[k + 1] = cur * factor;
  }
}

// log c_k for the Laguerre normalization c_k = sqrt(k! / Gamma(k + alpha + 1)).
double laguerre_log_norm(int k, double alpha) {
  return 0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + alpha + 1.0));
}

double standard_coordinate(const BasisDescriptor& d, double x) {
  return d.unbounded() ? d.beta * (x - d.x_left) : x;
}

void check_domain(const BasisDescriptor& d, double x) {
  if (!std::isfinite(x)) throw std::domain_error("basis evaluation at a non-finite point");
  if (!d.unbounded() && (x < -1.0 - 1e-12 || x > 1.0 + 1e-12)) {
    throw std::domain_error("bounded basis evaluated outside [-1, 1]");
  }
}

struct GridKey {
  Family family;
  int order;
  double a, b;
  auto operator<=>(const GridKey&) const = default;
};

class GridCache {
 public:
  std::shared_ptr<const StandardGrid> get(const BasisDescriptor& d) {
    const bool parametrized = d.family == Family::Jacobi || d.family == Family::LaguerreFn;
    const GridKey key{d.family, d.order, parametrized ? d.a : 0.0, d.family == Family::Jacobi ? d.b : 0.0};
    {
      std::lock_guard lock(mutex_);
      if (auto it = index_.find(key); it != index_.end()) {
        lru_.splice(lru_.begin(), lru_, it->second);
        return it->second->second;
      }
    }
    auto grid = build(d);
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return it->second->second;
    lru_.emplace_front(key, grid);
    index_[key] = lru_.begin();
    while (lru_.size() > kCapacity) {
      index_.erase(lru_.back().first);
      lru_.pop_back();
    }
    return grid;
  }

 private:
  static constexpr std::size_t kCapacity = 48;

  static std::shared_ptr<const StandardGrid> build(const BasisDescriptor& d) {
    BasisDescriptor standard = d;
    standard.beta = 1.0;
    standard.x_left = 0.0;
    auto grid = std::make_shared<StandardGrid>();
    grid->rule = standard_rule(standard);
    grid->basis.resize(standard.size(), standard.size());
    kernels::basis_matrix(standard, grid->rule.nodes, grid->basis);
    grid->discrete_norms.assign(standard.size(), 0.0);
    for (int s = 0; s < standard.size(); ++s) {
      for (int i = 0; i < standard.size(); ++i) {
        const double v = grid->basis(s, i);
        grid->discrete_norms[i] += grid->rule.weights[s] * v * v;
      }
    }
    return grid;
  }

  std::mutex mutex_;
  std::list<std::pair<GridKey, std::shared_ptr<const StandardGrid>>> lru_;
  std::map<GridKey, decltype(lru_)::iterator> index_;
};

GridCache& grid_cache() {
  static GridCache cache;
  return cache;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::Jacobi: return "jacobi";
    case Family::Chebyshev: return "chebyshev";
    case Family::Legendre: return "legendre";
    case Family::LaguerreFn: return "laguerre";
    case Family::HermiteFn: return "hermite";
  }
  return "unknown";
}

BasisDescriptor BasisDescriptor::chebyshev(int order) {
  BasisDescriptor d{Family::Chebyshev, order, 0.0, 0.0, 1.0, 0.0};
  d.validate();
  return d;
}

BasisDescriptor BasisDescriptor::legendre(int order) {
  BasisDescriptor d{Family::Legendre, order, 0.0, 0.0, 1.0, 0.0};
  d.validate();
  return d;
}

BasisDescriptor BasisDescriptor::jacobi(int order, double a, double b) {
  BasisDescriptor d{Family::Jacobi, order, a, b, 1.0, 0.0};
  d.validate();
  return d;
}

BasisDescriptor BasisDescriptor::laguerre(int order, double alpha, double beta, double x_left) {
  BasisDescriptor d{Family::LaguerreFn, order, alpha, 0.0, beta, x_left};
  d.validate();
  return d;
}

BasisDescriptor BasisDescriptor::hermite(int order, double beta, double x_left) {
  BasisDescriptor d{Family::HermiteFn, order, 0.0, 0.0, beta, x_left};
  d.validate();
  return d;
}

BasisDescriptor BasisDescriptor::with_order(int n) const {
  BasisDescriptor d = *this;
  d.order = n;
  d.validate();
  return d;
}

BasisDescriptor BasisDescriptor::with_beta(double new_beta) const {
  if (!unbounded()) throw std::invalid_argument("scaling factor is fixed for bounded families");
  BasisDescriptor d = *this;
  d.beta = new_beta;
  d.validate();
  return d;
}

BasisDescriptor BasisDescriptor::with_shift(double new_x_left) const {
  if (!unbounded()) throw std::invalid_argument("translation is fixed for bounded families");
  BasisDescriptor d = *this;
  d.x_left = new_x_left;
  d.validate();
  return d;
}

void BasisDescriptor::validate() const {
  if (order < 0) throw std::invalid_argument("expansion order must be non-negative");
  if (order > kMaxOrder) {
    throw std::invalid_argument("expansion order " + std::to_string(order) +
                                " exceeds the supported maximum " + std::to_string(kMaxOrder));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("scaling factor must be positive");
  if (!std::isfinite(x_left)) throw std::invalid_argument("translation must be finite");
  switch (family) {
    case Family::Jacobi:
      if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("Jacobi parameters must exceed -1");
      break;
    case Family::LaguerreFn:
      if (!(a > -1.0)) throw std::invalid_argument("Laguerre parameter must exceed -1");
      break;
    default: break;
  }
  if (!unbounded() && (beta != 1.0 || x_left != 0.0)) {
    throw std::invalid_argument("bounded families have beta = 1 and x_L = 0");
  }
}

std::shared_ptr<const StandardGrid> standard_grid(const BasisDescriptor& descriptor) {
  descriptor.validate();
  return grid_cache().get(descriptor);
}

QuadratureRule nodes_weights(const BasisDescriptor& descriptor) {
  const auto grid = standard_grid(descriptor);
  QuadratureRule q = grid->rule;
  if (descriptor.unbounded()) {
    for (auto& x : q.nodes) x = x / descriptor.beta + descriptor.x_left;
    for (auto& w : q.weights) w /= descriptor.beta;
  }
  return q;
}

double basis_scale(const BasisDescriptor& descriptor) noexcept {
  return descriptor.unbounded() ? std::sqrt(descriptor.beta) : 1.0;
}

void evaluate_all(const BasisDescriptor& d, double x, std::span<double> out) {
  check_domain(d, x);
  if (static_cast<int>(out.size()) < d.size()) throw std::invalid_argument("evaluate_all: output too short");
  const double xi = standard_coordinate(d, x);
  switch (d.family) {
    case Family::HermiteFn: eval_hermite_functions(d.order, xi, out); break;
    case Family::LaguerreFn:
      if (xi < -1e-12) throw std::domain_error("Laguerre function evaluated left of x_L");
      eval_laguerre_functions(d.order, d.a, std::max(xi, 0.0), out);
      break;
    default: eval_polynomials(d, x, out, {}); return;
  }
  const double s = std::sqrt(d.beta);
  for (int i = 0; i <= d.order; ++i) out[i] *= s;
}

std::vector<double> evaluate_all(const BasisDescriptor& descriptor, double x) {
  std::vector<double> out(descriptor.size());
  evaluate_all(descriptor, x, out);
  return out;
}

void evaluate_derivatives(const BasisDescriptor& d, double x, std::span<double> out) {
  check_domain(d, x);
  const int n = d.order;
  if (static_cast<int>(out.size()) < d.size()) throw std::invalid_argument("evaluate_derivatives: output too short");
  const double xi = standard_coordinate(d, x);
  switch (d.family) {
    case Family::HermiteFn: {
      // h_n' = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}
      std::vector<double> h(n + 2);
      eval_hermite_functions(n + 1, xi, h);
      const double s = d.beta * std::sqrt(d.beta);
      for (int k = 0; k <= n; ++k) {
        const double lower = k > 0 ? std::sqrt(0.5 * k) * h[k - 1] : 0.0;
        out[k] = s * (lower - std::sqrt(0.5 * (k + 1)) * h[k + 1]);
      }
      return;
    }
    case Family::LaguerreFn: {
      if (xi < -1e-12) throw std::domain_error("Laguerre function evaluated left of x_L");
      // l_k' = -c_k sum_{j<k} l_j / c_j - l_k / 2
      std::vector<double> l(n + 1);
      eval_laguerre_functions(n, d.a, std::max(xi, 0.0), l);
      const double s = d.beta * std::sqrt(d.beta);
      double partial = 0.0;  // sum_{j<k} l_j / c_j
      for (int k = 0; k <= n; ++k) {
        const double log_ck = laguerre_log_norm(k, d.a);
        out[k] = s * (-std::exp(log_ck) * partial - 0.5 * l[k]);
        partial += l[k] * std::exp(-log_ck);
      }
      return;
    }
    default: {
      std::vector<double> v(n + 1);
      eval_polynomials(d, x, v, out);
      return;
    }
  }
}

std::vector<double> evaluate_derivatives(const BasisDescriptor& descriptor, double x) {
  std::vector<double> out(descriptor.size());
  evaluate_derivatives(descriptor, x, out);
  return out;
}

std::vector<double> norms(const BasisDescriptor& d) {
  d.validate();
  std::vector<double> g(d.size());
  switch (d.family) {
    case Family::Chebyshev:
      for (int i = 0; i <= d.order; ++i) g[i] = i == 0 ? kPi : 0.5 * kPi;
      break;
    case Family::Legendre:
      for (int i = 0; i <= d.order; ++i) g[i] = 2.0 / (2.0 * i + 1.0);
      break;
    case Family::Jacobi: {
      const double a = d.a, b = d.b;
      for (int i = 0; i <= d.order; ++i) {
        if (i == 0) {
          g[i] = jacobi_mu0(a, b);
          continue;
        }
        g[i] = std::exp((a + b + 1.0) * std::log(2.0) - std::log(2.0 * i + a + b + 1.0) +
                        std::lgamma(i + a + 1.0) + std::lgamma(i + b + 1.0) -
                        std::lgamma(i + a + b + 1.0) - std::lgamma(i + 1.0));
      }
      break;
    }
    case Family::LaguerreFn:
    case Family::HermiteFn: std::fill(g.begin(), g.end(), 1.0); break;
  }
  return g;
}

std::vector<double> discrete_norms(const BasisDescriptor& d) {
  std::vector<double> g = norms(d);
  if (!d.unbounded() && d.order >= 1) {
    const double ab1 = d.family == Family::Jacobi ? d.a + d.b + 1.0
                       : d.family == Family::Legendre ? 1.0
                                                      : 0.0;
    g.back() *= 2.0 + ab1 / d.order;
  }
  return g;
}

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi needs at least one node");
  const GaussNodes g = gauss_nodes(jacobi_recurrence(n, a, b), n);
  QuadratureRule q;
  q.nodes = g.nodes;
  q.weights.resize(n);
  for (int j = 0; j < n; ++j) q.weights[j] = std::exp(-g.log_christoffel[j]);
  return q;
}

}  // namespace spadapt
