#include <cmath>
#include <string>

#include "adia/asymptotics.hpp"
#include "adia/specialfns.hpp"
#include "adia/spectrum.hpp"
#include "doctest.h"

using namespace adia;

TEST_CASE("large-z expansion of a matches quadrature") {
  for (double z : {15.0, -15.0, 20.0, -20.0}) {
    for (int d = 0; d <= 2; ++d) {
      const cx ref = a_fn(z, d);
      CHECK(std::abs(a_fn_asymptotic(z, d) - ref) < 1e-12 * std::abs(ref));
      CHECK(a_fn_fast(z, d) == a_fn_asymptotic(z, d));
    }
  }
  CHECK(a_fn_fast(3.0, 0) == a_fn(3.0, 0));
  CHECK_THROWS_AS(a_fn_asymptotic(0.0, 0), Error);
}

TEST_CASE("regime classification") {
  const ModelParams mp{0.1, 1};
  const double tn = tau_threshold(1);
  const double dr = default_delta_reg(mp.eps);
  CHECK(dr == doctest::Approx(5.0 * std::cbrt(0.1)));
  CHECK(classify_regime(mp, tn / mp.eps) == Regime::Transition);
  CHECK(classify_regime(mp, (tn - 0.5 * dr) / mp.eps) == Regime::Transition);
  CHECK(classify_regime(mp, (tn - 1.5 * dr) / mp.eps) == Regime::Adiabatic);
  CHECK(classify_regime(mp, (tn + 0.01) / mp.eps) == Regime::Aftermath);
  CHECK(classify_regime(mp, (tn - 0.5) / mp.eps, 0.4) == Regime::Adiabatic);
  CHECK(std::string(regime_name(Regime::Aftermath)) == "aftermath");
  CHECK_THROWS_AS(classify_regime(mp, 11.0), Error);
}

TEST_CASE("Z_n vanishes at threshold and grows below it") {
  const ModelParams mp{0.05, 2};
  const double tn = tau_threshold(2);
  CHECK(big_z(mp, tn) == 0.0);
  double prev = 0.0;
  for (double d : {0.01, 0.1, 0.5, 1.0}) {
    const double z = big_z(mp, tn - d);
    CHECK(z > prev);
    prev = z;
  }
  CHECK_THROWS_AS(big_z(mp, tn + 0.1), Error);
}

TEST_CASE("transition term is continuous as Z tends to zero") {
  const ModelParams mp{0.1, 1};
  const double tn = tau_threshold(1);
  for (double x : {0.2, 1.0}) {
    const cx at = transition_leading(mp, x, tn / mp.eps);
    const cx near = transition_leading(mp, x, (tn - 1e-5) / mp.eps);
    CHECK(std::abs(at - near) < 1e-4 * std::abs(at));
    // The aftermath leading term starts from the same value.
    const AftermathTerms a = aftermath_terms(mp, x, tn / mp.eps);
    CHECK(std::abs(a.t0 - at) < 1e-12);
    CHECK(a.z_scaled == 0.0);
  }
}

TEST_CASE("transition term reduces to the adiabatic term away from threshold") {
  const ModelParams mp{0.02, 1};
  const double tau = tau_threshold(1) - 1.5, t = tau / mp.eps;
  for (double x : {0.3, 1.5}) {
    const cx a = adiabatic_leading(mp, x, t);
    const cx b = transition_leading(mp, x, t);
    CHECK(std::abs(a - b) < 0.05 * std::abs(a));
  }
}

TEST_CASE("short-time aftermath omits the radiation term") {
  const ModelParams mp{0.1, 1};
  const double tn = tau_threshold(1);
  const AftermathTerms near = aftermath_terms(mp, 0.5, (tn + 0.5 * std::cbrt(mp.eps)) / mp.eps);
  CHECK(near.g0 == cx(0.0));
  const AftermathTerms late = aftermath_terms(mp, 0.5, (tn + 2.0 * std::cbrt(mp.eps)) / mp.eps);
  CHECK(std::abs(late.g0) > 0.0);
  CHECK(std::abs(aftermath_sum(mp, 0.5, (tn + 0.3) / mp.eps) -
                 [&] {
                   const AftermathTerms a = aftermath_terms(mp, 0.5, (tn + 0.3) / mp.eps);
                   return a.t0 + a.r0 + a.g0;
                 }()) == 0.0);
}

TEST_CASE("radiation integral") {
  CHECK_THROWS_AS(g0_integral(0.0), Error);
  // For large d the integral approaches its s = 0 integrand value over 2 d.
  const double v = g0_integral(50.0);
  const double bound = std::abs(zeta_fn(0.0)) / 100.0 * 1.01;
  CHECK(std::abs(v) <= bound);
}

TEST_CASE("leading term dispatch") {
  const ModelParams mp{0.1, 1};
  const double tn = tau_threshold(1);
  const double t_ad = (tn - 2.5) / mp.eps;
  auto [v, r] = best_leading(mp, 0.5, t_ad);
  CHECK(r == Regime::Adiabatic);
  CHECK(v == adiabatic_leading(mp, 0.5, t_ad));
  const double outside = 1.0 - mp.eps * t_ad + 0.5;
  CHECK(best_leading(mp, outside, t_ad).first == outside_leading(mp, outside, t_ad));
  CHECK_THROWS_AS(best_leading(mp, 5.0, tn / mp.eps), Error);
}

TEST_CASE("outside term is continuous with the inside term at the edge") {
  const ModelParams mp{0.1, 1};
  const double t = -25.0, edge = 1.0 - mp.eps * t;
  CHECK(std::abs(adiabatic_leading(mp, edge, t) - outside_leading(mp, edge, t)) < 1e-10);
}
