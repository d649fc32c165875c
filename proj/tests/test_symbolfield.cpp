#include <cmath>
#include <random>

#include "adia/branchfns.hpp"
#include "adia/specialfns.hpp"
#include "adia/symbolfield.hpp"
#include "doctest.h"

using namespace adia;

// Kernel integral references from mpmath quadrature of (pi/2) sech^2(pi s) l0(p + i eps s).
TEST_CASE("L0 against reference quadrature") {
  struct Ref { cx p; double eps; cx v; };
  const Ref refs[] = {
      {{0.5, 0}, 0.1, {1.0465594859518931, 0}},
      {{0.3, 0.2}, 0.05, {0.59601163725398981, 0.41539662763899113}},
      {{0, 0.9}, 0.1, {0, 1.6174259904141632}},
      {{-0.6, -0.4}, 0.1, {-1.1449866060896622, -0.91844093314332076}},
  };
  for (const Ref& r : refs) {
    const QuadratureReport q = big_l0(CxPoint(r.p), r.eps);
    CHECK(std::abs(q.value - r.v) < 1e-12);
    CHECK(q.est_error >= 0.0);
  }
}

TEST_CASE("L0 symmetries") {
  CHECK(std::abs(big_l0(CxPoint(0.0), 0.1).value) < 1e-12);
  CHECK(std::abs(big_l0(CxPoint(cx(0, 0.5)), 0.1).value.real()) < 1e-10);
  const cx p(1.4, 0.3);
  CHECK(std::abs(big_l0(CxPoint(-p), 0.1).value + big_l0(CxPoint(p), 0.1).value) < 1e-12);
  CHECK(std::abs(big_l0(CxPoint(std::conj(p)), 0.1).value - std::conj(big_l0(CxPoint(p), 0.1).value)) < 1e-12);
}

TEST_CASE("L0 approaches l0 at order eps squared") {
  double prev = 0;
  for (double eps : {0.1, 0.05, 0.025}) {
    const double d = std::abs(big_l0(CxPoint(0.5), eps).value - l0(cx(0.5)));
    if (prev > 0) CHECK(prev / d == doctest::Approx(4.0).epsilon(0.1));
    prev = d;
  }
}

TEST_CASE("L0 difference equation with independent contours") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-1.6, 1.6), im(0.3, 1.2);
  for (int i = 0; i < 10; ++i) {
    const double eps = i % 2 ? 0.1 : 0.05;
    cx p(re(rng), im(rng));
    // Both shifted points need room for the bent leg above the cut.
    while (p.imag() < std::abs(p.real()) + eps / 2 - 1.0 + eps / 2 + 0.05) p = cx(re(rng), im(rng));
    const cx up = big_l0(CxPoint(p + eps / 2), eps, L0Method::Bent).value;
    const cx dn = big_l0(CxPoint(p - eps / 2), eps, L0Method::Bent).value;
    const cx d = l0_prime(p);
    CHECK(std::abs(up - dn - eps * d) <= 1e-8 * (1 + std::abs(d)));
    // The bent contour and the default evaluation agree.
    CHECK(std::abs(up - big_l0(CxPoint(p + eps / 2), eps).value) < 1e-10);
  }
}

TEST_CASE("contour admissibility") {
  CHECK_THROWS_AS(big_l0(CxPoint(cx(1.2, 0.01)), 0.1, L0Method::Direct), Error);
  CHECK_THROWS_AS(bent_contour(CxPoint(cx(1.5, 0.001)), 0.1), Error);
  const ContourSpec c = bent_contour(CxPoint(cx(1.2, 0.8)), 0.1);
  CHECK(c.kind == ContourKind::BentVertical);
  CHECK(c.clearance == doctest::Approx(0.025));
  for (std::size_t i = 1; i < c.nodes.size(); ++i) CHECK(c.nodes[i].imag() > c.nodes[i - 1].imag());
}

TEST_CASE("L0 near the branch point follows zeta") {
  const double eps = 0.05;
  for (double r : {0.05, 0.1, 0.2}) {
    const cx p = 1.0 + std::polar(r, 0.75 * kPi);
    const cx approx = kPi + std::sqrt(2 * eps) * zeta_fn((p - 1.0) / eps);
    const double bound = 2.0 * (std::pow(eps, 1.5) + std::pow(r, 1.5));
    CHECK(std::abs(big_l0(CxPoint(p), eps).value - approx) < bound);
  }
}

TEST_CASE("L1 difference equation and large-p behaviour") {
  const double eps = 0.1;
  const cx p(2.0, 0.5);
  const cx up = big_l1(CxPoint(p + eps / 2, Sheet::C1), eps).value;
  const cx dn = big_l1(CxPoint(p - eps / 2, Sheet::C1), eps).value;
  CHECK(std::abs(up - dn - eps * l1_prime(CxPoint(p, Sheet::C1))) < 1e-9);
  const cx q(3.0, 0.2);
  const double e2 = 0.05;
  const double bound = 2.0 * e2 * e2 * std::abs(q) / std::pow(std::abs(q * q - 1.0), 1.5);
  CHECK(std::abs(big_l1(CxPoint(q, Sheet::C1), e2).value - l1(CxPoint(q, Sheet::C1))) < bound);
}

TEST_CASE("periodic part P") {
  const double eps = 0.1;
  const cx p(1.3, 0.4);
  CHECK(std::abs(periodic_p(p + eps, eps) - periodic_p(p, eps)) < 1e-9);
  CHECK_THROWS_AS(periodic_p(cx(1.3, -0.1), eps), Error);
  for (double e : {0.1, 0.05}) {
    const auto pk = periodic_p_fourier(e, 3);
    CHECK(std::abs(pk[2]) < std::abs(pk[1]));
    CHECK(std::abs(pk[1]) < std::abs(pk[0]));
    const cx lead = 2.0 * std::polar(1.0, kPi / 4) * std::sqrt(e);
    CHECK(std::abs(pk[0] / lead - 1.0) < 3.0 * e);
  }
}

// R0 references from mpmath: exp((i/eps) int_0^p L0) with nested quadrature.
TEST_CASE("R0 against reference values") {
  CHECK(std::abs(r0(CxPoint(0.4), 0.1) - cx(-0.0508626939615686, 0.998705655517666)) < 1e-12);
  CHECK(std::abs(r0(CxPoint(cx(0.3, 0.25)), 0.1) - cx(0.214663529694357, 0.0562846450966119)) < 1e-12);
  CHECK(std::abs(r0(CxPoint(0.0), 0.1) - 1.0) < 1e-15);
}

TEST_CASE("R0 difference equation and modulus") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(-0.5, 0.5), unit(-0.95, 0.95);
  const double eps = 0.1;
  for (int i = 0; i < 20; ++i) {
    cx p(re(rng), im(rng));
    if (std::abs(p.imag()) < 0.1 && std::abs(p.real()) > 0.8) p += cx(0, 0.2);
    const cx a = r0(CxPoint(p + eps / 2), eps);
    const cx b = rho0(CxPoint(p)) * r0(CxPoint(p - eps / 2), eps);
    CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)));
    CHECK(std::abs(std::abs(r0(CxPoint(unit(rng)), eps)) - 1.0) < 1e-9);
  }
}

TEST_CASE("R0 boundary values are even") {
  for (double x : {0.2, 0.5, 0.9})
    CHECK(std::abs(r0(CxPoint::below(-x), 0.1) - r0(CxPoint::above(x), 0.1)) < 1e-9);
  for (double x : {1.3, 2.2})
    CHECK(std::abs(r0(CxPoint::below(-x), 0.1) - r0(CxPoint::above(x), 0.1)) < 1e-9);
}

TEST_CASE("R on the real line") {
  const double eps = 0.1;
  for (double p : {0.35, -0.35, 1.25}) {
    const cx a = r_boundary(p + eps / 2, eps);
    const cx b = rho_real(p) * r_boundary(p - eps / 2, eps);
    CHECK(std::abs(a - b) < 1e-8);
  }
  CHECK(std::abs(r_boundary(5.0, 0.2)) < 1e-3 * std::abs(r_boundary(1.5, 0.2)));
  const RLine line = r_line(0.03, eps, default_l_max(eps));
  CHECK(std::abs(line.at(3) - r_boundary(0.33, eps)) < 1e-10);
  CHECK_THROWS_AS(r_line(0.03, eps, 3), Error);
}

TEST_CASE("amplitude A") {
  CHECK(std::abs(amplitude_a(CxPoint(0.0), 0.1) - 1.0) < 1e-15);
  const cx p(0.6, 0.7);
  // A is not unimodular, so reflection pairs A with its conjugate reciprocal.
  CHECK(std::abs(amplitude_a(CxPoint(std::conj(p)), 0.1) * std::conj(amplitude_a(CxPoint(p), 0.1)) - 1.0) < 1e-9);
  // A - 1 shrinks roughly like sqrt(eps).
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(0.2, 1.0);
  std::vector<cx> pts;
  for (int i = 0; i < 30; ++i) pts.push_back({re(rng), im(rng)});
  double m1 = 0, m2 = 0;
  for (const cx& q : pts) {
    m1 = std::max(m1, std::abs(amplitude_a(CxPoint(q), 0.1) - 1.0));
    m2 = std::max(m2, std::abs(amplitude_a(CxPoint(q), 0.05) - 1.0));
  }
  const double ratio = m1 / m2;
  CHECK(ratio > std::sqrt(2.0) / 2.0);
  CHECK(ratio < std::sqrt(2.0) * 2.0);
  CHECK(std::abs(amplitude_a(CxPoint(p), 0.1) -
                 r0(CxPoint(p), 0.1) * std::exp(-kI / 0.1 * int_l0(p))) < 1e-9);
}

TEST_CASE("action integral path independence and growth") {
  const double eps = 0.1;
  const cx p(0.7, 0.6);
  const cx direct = action_integral(CxPoint(p), eps);
  CHECK(std::abs(direct - (action_integral_minus_l0(CxPoint(p), eps) + int_l0(p))) < 1e-10);
  // Second path: along the real axis to Re p, then vertically.
  auto leg1 = [&](double u) { return big_l0(CxPoint(u * p.real()), eps).value * p.real(); };
  auto leg2 = [&](double u) { return big_l0(CxPoint(cx(p.real(), u * p.imag())), eps).value * kI * p.imag(); };
  const cx bent = integrate_adaptive(leg1, 0.0, 1.0).value + integrate_adaptive(leg2, 0.0, 1.0).value;
  CHECK(std::abs(direct - bent) < 1e-9);
  for (double r : {4.0, 8.0}) {
    const cx q = std::polar(r, kPi / 4);
    const double growth = (kI * action_integral(CxPoint(q), eps)).real();
    CHECK(std::abs(growth + 2.0 * std::abs(q) * std::log(std::abs(q))) < 3.0 * std::abs(q));
  }
}
