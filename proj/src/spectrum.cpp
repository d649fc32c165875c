#include "adia/spectrum.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "adia/quadrature.hpp"

namespace adia {

void validate(const ModelParams& mp) {
  if (!(mp.eps > 0.0 && mp.eps < 1.0))
    fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1)");
  if (mp.n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  if (!(mp.tol > 0.0)) fail(ErrorCode::InvalidArgument, "tol must be positive");
}

double tau_threshold(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  return 1.0 - kPi * (n - 0.5);
}

double p_n(int n, double tau, double tol) {
  if (!(tau < tau_threshold(n)))
    fail(ErrorCode::NoEigenvalue, "no eigenvalue for n = " + std::to_string(n) +
                                      " at tau = " + std::to_string(tau));
  auto g = [&](double p) { return (1.0 - tau) * p + std::asin(p) - kPi * n; };
  auto stop = [&](double a, double b) { return b - a <= std::max(tol, 1e-16); };
  auto r = boost::math::tools::bisect(g, 0.0, 1.0, stop);
  return 0.5 * (r.first + r.second);
}

double e_n(int n, double tau) {
  const double p = p_n(n, tau);
  return (p - 1.0) * (p + 1.0);
}

double dlnpn_dtau(int n, double tau) {
  const double p = p_n(n, tau);
  return 1.0 / ((1.0 - tau) + 1.0 / std::sqrt((1.0 - p) * (1.0 + p)));
}

double psi_n(int n, double tau, double x) {
  if (x < 0.0) fail(ErrorCode::InvalidArgument, "x must be >= 0");
  const double p = p_n(n, tau);
  const double edge = 1.0 - tau;
  if (x <= edge) return std::sin(p * x);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * p * std::exp(-(x - edge) * std::sqrt((1.0 - p) * (1.0 + p)));
}

cx c_n_phase(const ModelParams& mp) {
  validate(mp);
  const double phase = (2.0 * tau_threshold(mp.n) - 3.0) / mp.eps + kPi / 4.0;
  return std::polar(1.0, std::fmod(phase, 2.0 * kPi));
}

double int_e_n(int n, double tau) {
  const double tn = tau_threshold(n);
  if (tau > tn) fail(ErrorCode::NoEigenvalue, "int_e_n needs tau <= tau_n");
  if (tau == tn) return 0.0;
  // E_n vanishes quadratically at tau_n, so the integrand is smooth there.
  auto f = [&](double s) -> cx {
    if (s >= tn) return 0.0;
    return e_n(n, s);
  };
  AdaptiveOptions opt;
  opt.abs_tol = 1e-15;
  opt.rel_tol = 1e-14;
  return -integrate_adaptive(f, tau, tn, opt).value.real();
}

cx p_tilde_residual(int n, double tau, double xi, cx p) {
  const cx w = std::sqrt((1.0 - p) * (1.0 + p));
  return (1.0 - tau) * p + std::asin(p) - kI * p * xi / (2.0 * w) - kPi * n;
}

namespace {

cx g_prime(double tau, double xi, cx p) {
  const cx w2 = (1.0 - p) * (1.0 + p);
  const cx w = std::sqrt(w2);
  return (1.0 - tau) + 1.0 / w - 0.5 * kI * xi / (w2 * w);
}

// Newton corrector at fixed (tau, xi) from a nearby guess.
bool newton(int n, double tau, double xi, cx& p) {
  for (int it = 0; it < 40; ++it) {
    const cx d = p_tilde_residual(n, tau, xi, p) / g_prime(tau, xi, p);
    p -= d;
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) return false;
    if (std::abs(d) <= 1e-15 * std::max(1.0, std::abs(p))) return true;
  }
  return std::abs(p_tilde_residual(n, tau, xi, p)) < 1e-12;
}

bool admissible(cx p, double xi) {
  if (xi == 0.0) return std::abs(p.imag()) < 1e-12 && p.real() > 0.0 && p.real() < 1.0;
  return p.real() > 0.0 && p.imag() > -1e-14;
}

// Continue the root along a straight path in (tau, xi), halving the step on
// failure.
cx continue_root(int n, cx p, double tau0, double xi0, double tau1, double xi1) {
  double s = 0.0, h = 0.05;
  while (s < 1.0) {
    const double s1 = std::min(1.0, s + h);
    const double tau = tau0 + (tau1 - tau0) * s1;
    const double xi = xi0 + (xi1 - xi0) * s1;
    cx q = p;
    if (newton(n, tau, xi, q) && admissible(q, xi) && std::abs(q - p) < 0.2) {
      p = q;
      s = s1;
      h = std::min(0.2, h * 1.5);
    } else {
      h *= 0.5;
      if (h < 1e-10)
        fail(ErrorCode::ContinuationFailure, "p_tilde continuation stalled");
    }
  }
  return p;
}

}  // namespace

cx p_n_tilde(int n, double tau, double xi) {
  if (!(tau < 1.0)) fail(ErrorCode::InvalidArgument, "p_n_tilde needs tau < 1");
  if (!(xi >= 0.0)) fail(ErrorCode::InvalidArgument, "p_n_tilde needs xi >= 0");
  const double tn = tau_threshold(n);
  const double start = std::min(tau, tn - 0.25);
  cx p = p_n(n, start);
  if (xi == 0.0 && start == tau) return p;
  if (xi == 0.0)
    fail(ErrorCode::ContinuationFailure, "p_tilde at xi = 0 exists only below tau_n");
  p = continue_root(n, p, start, 0.0, start, xi);
  if (start != tau) p = continue_root(n, p, start, xi, tau, xi);
  return p;
}

cx dlnptilde_dtau(int n, double tau, double xi, cx p) {
  (void)n;
  return 1.0 / g_prime(tau, xi, p);
}

}  // namespace adia
