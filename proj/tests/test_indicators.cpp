#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spadapt/indicators.hpp"
#include "support.hpp"

using namespace spadapt;

TEST_SUITE("indicators") {

TEST_CASE("frequency indicator on an orthonormal basis") {
  const BasisDescriptor d = BasisDescriptor::hermite(5, 1.0);
  std::vector<double> u(6, 0.0);
  u[0] = 1.0;
  CHECK(frequency_indicator(RealExpansion(d, u)) == 0.0);
  u.assign(6, 0.0);
  u[5] = 1.0;
  CHECK(frequency_indicator(RealExpansion(d, u)) == doctest::Approx(1.0));
  IndicatorConfig two;
  two.tail_width = 2;
  CHECK(frequency_indicator(RealExpansion(d, std::vector<double>(6, 1.0)), two) ==
        doctest::Approx(std::sqrt(2.0 / 6.0)).epsilon(1e-14));
}

TEST_CASE("frequency indicator weights by the basis norms") {
  const BasisDescriptor d = BasisDescriptor::legendre(4);
  const std::vector<double> u = testing::random_vector(5, 2);
  const std::vector<double> g = norms(d);
  IndicatorConfig one;
  one.tail_width = 1;
  double total = 0.0;
  for (int i = 0; i < 5; ++i) total += g[i] * u[i] * u[i];
  CHECK(frequency_indicator(RealExpansion(d, u), one) == doctest::Approx(std::sqrt(g[4] * u[4] * u[4] / total)));
}

TEST_CASE("frequency indicator properties") {
  const BasisDescriptor d = BasisDescriptor::chebyshev(12);
  const std::vector<double> u = testing::random_vector(13, 4);
  std::vector<double> scaled(u);
  for (double& c : scaled) c *= -37.5;
  const double f = frequency_indicator(RealExpansion(d, u));
  CHECK(f >= 0.0);
  CHECK(f <= 1.0);
  CHECK(frequency_indicator(RealExpansion(d, scaled)) == doctest::Approx(f).epsilon(1e-14));
  IndicatorConfig all;
  all.tail_width = 12;
  // M = N leaves out mode 0 only
  std::vector<double> no_mean(u);
  no_mean[0] = 0.0;
  CHECK(frequency_indicator(RealExpansion(d, no_mean), all) == doctest::Approx(1.0).epsilon(1e-14));
  const double g0 = norms(d)[0];
  double total = 0.0;
  for (int i = 0; i <= 12; ++i) total += norms(d)[i] * u[i] * u[i];
  CHECK(frequency_indicator(RealExpansion(d, u), all) == doctest::Approx(std::sqrt(1.0 - g0 * u[0] * u[0] / total)));

  std::vector<cplx> c(13);
  for (int i = 0; i < 13; ++i) c[i] = cplx(0.0, u[i]);
  CHECK(frequency_indicator(ComplexExpansion(d, c)) == doctest::Approx(f).epsilon(1e-14));
}

TEST_CASE("tail width defaults to N/3 and is clamped") {
  IndicatorConfig c;
  CHECK(c.width(9) == 3);
  CHECK(c.width(2) == 1);
  c.tail_width = 50;
  CHECK(c.width(10) == 10);
}

TEST_CASE("axis indicators") {
  const BasisDescriptor dx = BasisDescriptor::legendre(6), dy = BasisDescriptor::chebyshev(5);
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(7, 6);
  u(0, 0) = 2.0;
  CHECK(frequency_indicator_axis(Expansion2D(dx, dy, u), Axis::x) == 0.0);
  CHECK(frequency_indicator_axis(Expansion2D(dx, dy, u), Axis::y) == 0.0);
  u.setZero();
  u.row(6).setConstant(1.0);
  CHECK(frequency_indicator_axis(Expansion2D(dx, dy, u), Axis::x) == doctest::Approx(1.0));

  const std::vector<double> a = testing::random_vector(7, 8), b = testing::random_vector(6, 9);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 6; ++j) u(i, j) = a[i] * b[j];
  const Expansion2D rank1(dx, dy, u);
  CHECK(frequency_indicator_axis(rank1, Axis::x) == doctest::Approx(frequency_indicator(RealExpansion(dx, a))));
  CHECK(frequency_indicator_axis(rank1, Axis::y) == doctest::Approx(frequency_indicator(RealExpansion(dy, b))));
}

TEST_CASE("exterior indicator oracles") {
  const BasisDescriptor h = BasisDescriptor::hermite(6, 1.0);
  CHECK(exterior_error_indicator(RealExpansion(h, {1.0, 0, 0, 0, 0, 0, 0}), -1e6) == doctest::Approx(1.0));
  // Laguerre constant in the span would need a zero derivative: use the zero function
  CHECK(exterior_error_indicator(RealExpansion::zero(h), 0.0) == 0.0);

  // h_0 = pi^{-1/4} e^{-x^2/2}, derivative -x h_0; |.|^2 integrates to
  // x^2 e^{-x^2}, so the ratio is an erfc-type expression
  auto g = [](double x) { return x * x * std::exp(-x * x); };
  const double whole = testing::integrate(g, -12.0, 12.0);
  for (double xr : {-0.7, 0.0, 1.0, 2.3}) {
    const double outer = testing::integrate(g, xr, 12.0);
    CHECK(exterior_error_indicator(RealExpansion(h, {1.0, 0, 0, 0, 0, 0, 0}), xr) ==
          doctest::Approx(std::sqrt(outer / whole)).epsilon(1e-10));
  }
  CHECK(exterior_error_indicator(RealExpansion(h, {1.0, 0, 0, 0, 0, 0, 0}), 1.0) == doctest::Approx(0.534980).epsilon(1e-6));

  // Laguerre: e^{-x/2} for alpha = 0, beta = 1 is l_0 itself
  const BasisDescriptor l = BasisDescriptor::laguerre(4, 0.0, 1.0);
  CHECK(exterior_error_indicator(RealExpansion(l, {1.0, 0, 0, 0, 0}), 2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("exterior indicator is monotone in x_R") {
  const BasisDescriptor d = BasisDescriptor::hermite(20, 1.3, 0.4);
  const RealExpansion u(d, testing::random_vector(21, 13));
  double previous = 2.0;
  for (double xr = -6.0; xr <= 6.0; xr += 0.25) {
    const double e = exterior_error_indicator(u, xr);
    CHECK(e <= previous + 1e-14);
    CHECK(e >= 0.0);
    previous = e;
  }
  CHECK_THROWS_AS(exterior_error_indicator(RealExpansion::zero(BasisDescriptor::legendre(3)), 0.0), std::invalid_argument);
}

TEST_CASE("default exterior boundary") {
  CHECK(default_x_right(BasisDescriptor::hermite(1, 1.0)) == doctest::Approx(1.0 / std::numbers::sqrt2));
  const BasisDescriptor l1 = BasisDescriptor::laguerre(1, 0.0, 1.0);
  CHECK(default_x_right(l1) == nodes_weights(l1).nodes[1]);
  const BasisDescriptor l0 = BasisDescriptor::laguerre(0, 0.0, 1.0, 3.0);
  CHECK(default_x_right(l0) == nodes_weights(l0).nodes[0]);
  CHECK_THROWS_AS(default_x_right(BasisDescriptor::chebyshev(4)), std::invalid_argument);
}

TEST_CASE("relative error") {
  const BasisDescriptor d = BasisDescriptor::chebyshev(20);
  const RealExpansion u = interpolate<double>(d, [](double x) { return std::exp(x); });
  CHECK(relative_error<double>(u, [](double x) { return std::exp(x); }) < 1e-12);
  CHECK(relative_error<double>(u, [&](double x) { return u(x); }) <= 1e-13);
  CHECK(relative_error<double>(RealExpansion::zero(d), [](double x) { return 1.0 + x; }) == doctest::Approx(1.0));
  CHECK_THROWS_AS(relative_error<double>(u, [](double) { return 0.0; }), std::domain_error);
}

}  // TEST_SUITE
