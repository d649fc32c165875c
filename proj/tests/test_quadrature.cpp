#include <cmath>

#include "adia/quadrature.hpp"
#include "doctest.h"

using namespace adia;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int order : {8, 16, 24, 32, 48, 64}) {
    const GaussRule& g = gauss_rule(order);
    REQUIRE(g.x.size() == static_cast<std::size_t>(order));
    double s0 = 0, s2 = 0, shigh = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      s0 += g.w[i];
      s2 += g.w[i] * g.x[i] * g.x[i];
      shigh += g.w[i] * std::pow(g.x[i], 2 * order - 2);
      if (i) CHECK(g.x[i] > g.x[i - 1]);
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(shigh == doctest::Approx(2.0 / (2 * order - 1)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_rule(7), Error);
}

TEST_CASE("cumulative matrix reproduces antiderivatives") {
  const int order = 16;
  const GaussRule& g = gauss_rule(order);
  const auto& w = gauss_cumulative_matrix(order);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    double acc = 0;
    for (std::size_t j = 0; j < g.x.size(); ++j) acc += w[i][j] * std::cos(g.x[j]);
    CHECK(acc == doctest::Approx(std::sin(g.x[i]) + std::sin(1.0)).epsilon(1e-13));
  }
}

TEST_CASE("adaptive Gauss-Kronrod") {
  auto f = [](double x) { return cx(std::exp(-x * x), std::sin(3 * x)); };
  const QuadratureReport r = integrate_adaptive(f, 0.0, 4.0);
  CHECK(std::abs(r.value.real() - std::sqrt(kPi) / 2 * std::erf(4.0)) < 1e-13);
  CHECK(std::abs(r.value.imag() - (1 - std::cos(12.0)) / 3) < 1e-13);
  CHECK(r.est_error >= 0.0);
  CHECK(r.nodes_used > 0);
  auto kink = [](double x) { return cx(std::abs(x - 0.3), 0); };
  CHECK(std::abs(integrate_adaptive(kink, 0.0, 1.0, {}, {0.3}).value.real() - (0.045 + 0.245)) < 1e-14);
  auto sing = [](double x) { return cx(1.0 / std::sqrt(x), 0); };
  CHECK(std::abs(integrate_adaptive(sing, 0.0, 1.0).value.real() - 2.0) < 1e-10);
  AdaptiveOptions tight;
  tight.max_intervals = 3;
  tight.abs_tol = tight.rel_tol = 1e-16;
  auto osc = [](double x) { return cx(std::sin(200 * x), 0); };
  CHECK_THROWS_AS(integrate_adaptive(osc, 0.0, 10.0, tight), Error);
  CHECK_NOTHROW(integrate_adaptive_nothrow(osc, 0.0, 10.0, tight));
}
