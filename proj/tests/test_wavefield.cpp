#include <cmath>

#include "adia/branchfns.hpp"
#include "adia/quadrature.hpp"
#include "adia/spectrum.hpp"
#include "adia/wavefield.hpp"
#include "doctest.h"

using namespace adia;

TEST_CASE("action derivatives match finite differences") {
  const double h = 1e-5;
  for (cx p : {cx(0.3, 0.0), cx(0.2, 0.4), cx(-0.7, 0.3), cx(1.4, 0.6)}) {
    for (int n : {1, 2}) {
      const double tau = -1.5;
      const ActionEval a = action(CxPoint(p), tau, n);
      const ActionEval ap = action(CxPoint(p + h), tau, n);
      const ActionEval am = action(CxPoint(p - h), tau, n);
      CHECK(std::abs((ap.value - am.value) / (2 * h) - a.dp) < 1e-8);
      CHECK(std::abs((ap.dp - am.dp) / (2 * h) - a.dpp) < 1e-7);
    }
  }
}

TEST_CASE("action value against direct quadrature of its derivative") {
  const double tau = -2.0;
  const int n = 1;
  for (double p : {0.35, 0.8, -0.6}) {
    auto f = [&](double s) -> cx { return 2.0 * s * (1.0 - tau) - 2.0 * kPi * n + l0(cx(s)); };
    AdaptiveOptions opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-13;
    const cx ref = integrate_adaptive(f, 0.0, p, opt).value;
    CHECK(std::abs(action(CxPoint(p), tau, n).value - ref) < 1e-11);
  }
}

TEST_CASE("action at the branch points") {
  const ActionEval a = action(CxPoint(1.0), -1.0, 1);
  CHECK(std::isinf(a.dpp.real()));
  CHECK(std::isfinite(a.value.real()));
}

TEST_CASE("Legendre identities") {
  for (auto [n, tau] : {std::pair{1, -2.0}, std::pair{2, -6.0}, std::pair{1, -0.7}}) {
    const LegendreCheck c = legendre_check(n, tau);
    CHECK(std::abs(c.lhs1 - c.rhs1) <= 1e-7);
    CHECK(std::abs(c.lhs2 - c.rhs2) <= 1e-7);
  }
}

TEST_CASE("contour quadrature agrees with the series") {
  const ModelParams mp{0.2, 1};
  const double t = -2.0 / mp.eps;
  const SeriesField sf(mp.eps);
  for (double x : {0.1, 0.7, 1.5, 2.9}) {
    const cx c = psi_n_inside(mp, x, t).psi;
    const cx s = sf.psi(mp.n, x, t).psi;
    CHECK(std::abs(c - s) < 1e-5);
  }
}

TEST_CASE("traced steepest-descent contour matches the default") {
  const ModelParams mp{0.1, 1};
  const double tau = -1.5, t = tau / mp.eps;
  const ContourSpec traced = trace_steepest(mp.n, tau, 0.0, mp.eps);
  for (double x : {0.3, 1.2, 2.2}) {
    const cx a = psi_n_inside(mp, x, t).psi;
    const cx b = psi_n_inside(mp, x, t, traced).psi;
    CHECK(std::abs(a - b) < 1e-8 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("field vanishes at the wall") {
  const SeriesField sf(0.1);
  for (double t : {-20.0, -5.0, 3.0}) CHECK(std::abs(sf.psi(1, 0.0, t).psi) == 0.0);
  CHECK(std::abs(psi_n_inside(ModelParams{0.1, 1}, 0.0, -20.0).psi) < 1e-14);
}

TEST_CASE("series field is the Fourier coefficient of the generating solution") {
  // Psi_n = eps^{-1/2} int_{-eps/2}^{eps/2} Psi(x, t, p) e^{-2 pi i n p / eps} dp.
  const double eps = 0.2;
  const SeriesField sf(eps);
  for (int n : {1, 2}) {
    for (double x : {0.4, 1.9}) {
      for (double t : {-10.0, -3.0}) {
        auto f = [&](double p) -> cx {
          return generating_series(eps, x, t, p) * std::polar(1.0, -2.0 * kPi * n * p / eps);
        };
        AdaptiveOptions opt;
        opt.abs_tol = 1e-13;
        opt.rel_tol = 1e-11;
        const cx ref = integrate_adaptive(f, -eps / 2, eps / 2, opt).value / std::sqrt(eps);
        CHECK(std::abs(sf.psi(n, x, t).psi - ref) < 1e-9);
      }
    }
  }
}

TEST_CASE("interface continuity of the series") {
  const double eps = 0.1;
  const SeriesField sf(eps);
  const double t = -15.0, edge = 1.0 - eps * t;
  const cx in = sf.psi(1, edge, t, SeriesField::Side::Inside).psi;
  const cx out = sf.psi(1, edge, t, SeriesField::Side::Outside).psi;
  CHECK(std::abs(in - out) < 1e-6);
}

TEST_CASE("invalid arguments") {
  const SeriesField sf(0.1);
  CHECK_THROWS_AS(sf.psi(1, -0.1, 0.0), Error);
  CHECK_THROWS_AS(sf.psi(0, 0.5, 0.0), Error);
  CHECK_THROWS_AS(sf.psi(1, 0.5, 11.0), Error);
  CHECK_THROWS_AS(generating_series(1.5, 0.1, 0.0, 0.0), Error);
}
