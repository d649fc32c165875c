#include "adia/specialfns.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "adia/quadrature.hpp"

namespace adia {

namespace {

using lcx = std::complex<long double>;

constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kAip0 = 0.258819403792806798405183560189203963L;  // -Ai'(0)

// Coefficients u_k, v_k of the large-argument Airy expansions.
const std::vector<double>& airy_u() {
  static const std::vector<double> u = [] {
    std::vector<double> c{1.0};
    for (int k = 1; k < 60; ++k)
      c.push_back(c.back() * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
                  (216.0 * k * (2.0 * k - 1.0)));
    return c;
  }();
  return u;
}

double airy_v(int k) {
  return -(6.0 * k + 1.0) / (6.0 * k - 1.0) * airy_u()[k];
}

cx maclaurin(cx s_in, int derivative, const SeriesControl& ctl) {
  const lcx s(s_in.real(), s_in.imag());
  const lcx s3 = s * s * s;
  // a_k = s^{3k} / prod (3j-1)(3j), b_k = s^{3k} / prod (3j)(3j+1),
  // c_k = 3k s^{3k-3} / prod (3j-1)(3j), so that
  // f = sum a_k, g = s sum b_k, f' = s^2 sum_{k>=1} c_k, g' = sum (3k+1) b_k.
  lcx a = 1.0L, b = 1.0L, c = 0.5L;
  lcx f = a, g = b, fp = c, gp = b;
  long double biggest = 1.0L;
  for (int k = 1; k < ctl.truncation_order; ++k) {
    const long double k3 = 3.0L * k;
    a *= s3 / ((k3 - 1.0L) * k3);
    b *= s3 / (k3 * (k3 + 1.0L));
    if (k >= 2) c *= s3 / ((k3 - 3.0L) * (k3 - 1.0L));
    f += a;
    g += b;
    if (k >= 2) fp += c;
    gp += (k3 + 1.0L) * b;
    const long double mag = std::abs(a) + std::abs(b) * (k3 + 1.0L) + std::abs(c);
    biggest = std::max({biggest, std::abs(a), std::abs(s * b), std::abs(s * s * c),
                        (k3 + 1.0L) * std::abs(b)});
    if (k > 3 && mag < 1e-22L * (std::abs(f) + std::abs(g) + std::abs(gp) + 1e-300L))
      break;
  }
  const double roundoff = static_cast<double>(biggest * 1e-19L);
  if (roundoff > ctl.target_abs_tol)
    fail(ErrorCode::AccuracyLoss, "Airy series cancellation exceeds tolerance");
  const lcx v = derivative == 0 ? kAi0 * f - kAip0 * s * g
                                : kAi0 * s * s * fp - kAip0 * gp;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Asymptotic expansion valid for |arg s| <= 2 pi / 3, |s| large.
cx asymptotic(cx s, int derivative, const SeriesControl& ctl) {
  const cx zeta = (2.0 / 3.0) * std::pow(s, 1.5);
  const cx s14 = std::pow(s, 0.25);
  const auto& u = airy_u();
  cx sum = 0.0, last = 0.0;
  cx zk = 1.0;
  double prev = 1e300;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double c = derivative == 0 ? u[k] : (k == 0 ? 1.0 : airy_v(static_cast<int>(k)));
    const cx term = (k % 2 == 0 ? 1.0 : -1.0) * c * zk;
    const double mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    last = term;
    prev = mag;
    if (mag < 1e-17 * std::abs(sum)) break;
    zk /= zeta;
  }
  if (std::abs(last) > std::max(ctl.target_abs_tol, 1e-10) * std::abs(sum))
    fail(ErrorCode::AccuracyLoss, "Airy asymptotic series did not converge");
  const double norm = 1.0 / (2.0 * std::sqrt(kPi));
  if (derivative == 0) return std::exp(-zeta) / s14 * norm * sum;
  return -s14 * std::exp(-zeta) * norm * sum;
}

}  // namespace

void validate(const SeriesControl& ctl) {
  if (!(ctl.target_abs_tol > 0.0) || !(ctl.switch_radius > 0.0) ||
      ctl.truncation_order < 4)
    fail(ErrorCode::InvalidArgument, "invalid SeriesControl");
}

namespace {

// Steepest descent through the saddle v = sqrt(s) of exp(v^3/3 - s v):
// Ai(s) = e^{-zeta}/pi int_0^inf e^{-sqrt(s) u^2} cos(u^3/3) du and
// Ai'(s) = -e^{-zeta}/pi int_0^inf e^{-sqrt(s) u^2} (sqrt(s) cos(u^3/3) + u sin(u^3/3)) du.
// Keeps full relative accuracy where the Maclaurin series cancels.
cx airy_saddle(cx s, int derivative) {
  const cx root = std::sqrt(s);
  const cx zeta = (2.0 / 3.0) * s * root;
  const double decay = root.real();
  const double u_max = std::sqrt(45.0 / decay);
  auto f = [&](double u) -> cx {
    const double c = std::cos(u * u * u / 3.0), sn = std::sin(u * u * u / 3.0);
    const cx g = std::exp(-root * u * u);
    return derivative == 0 ? g * c : g * (root * c + u * sn);
  };
  AdaptiveOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-15;
  const cx val = integrate_adaptive_nothrow(f, 0.0, u_max, opt).value;
  const cx out = std::exp(-zeta) / kPi * val;
  return derivative == 0 ? out : -out;
}

}  // namespace

cx airy_ai(cx s, int derivative, const SeriesControl& ctl) {
  validate(ctl);
  if (derivative != 0 && derivative != 1)
    fail(ErrorCode::InvalidArgument, "airy_ai derivative must be 0 or 1");
  if (!(std::abs(s) <= 1000.0))
    fail(ErrorCode::InvalidArgument, "airy_ai argument beyond |s| = 1000");
  if (std::abs(s) < ctl.switch_radius) {
    if (std::abs(s) >= 2.5 && std::abs(std::arg(s)) <= 0.5 * kPi) return airy_saddle(s, derivative);
    return maclaurin(s, derivative, ctl);
  }
  if (std::abs(std::arg(s)) <= 2.0 * kPi / 3.0) return asymptotic(s, derivative, ctl);
  // Rotate into the sector where the single-exponential expansion holds.
  const cx w = std::polar(1.0, 2.0 * kPi / 3.0);
  const cx wb = std::conj(w);
  if (derivative == 0)
    return -w * asymptotic(w * s, 0, ctl) - wb * asymptotic(wb * s, 0, ctl);
  return -wb * asymptotic(w * s, 1, ctl) - w * asymptotic(wb * s, 1, ctl);
}

cx f_transition(cx z, const SeriesControl& ctl) {
  const cx s = z * z;
  const cx phase = std::exp(cx(0.0, -kPi / 12.0));
  if (std::abs(s) >= ctl.switch_radius && std::abs(std::arg(s)) <= 2.0 * kPi / 3.0) {
    const cx root = std::sqrt(s);
    const double sigma = std::real(z / root) >= 0.0 ? 1.0 : -1.0;
    const cx zeta = (2.0 / 3.0) * s * root;
    const auto& u = airy_u();
    cx sum = 0.0, last = 0.0, zk = 1.0;
    double prev = 1e300;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const double c = sigma * u[k] + (k == 0 ? 1.0 : airy_v(static_cast<int>(k)));
      const cx term = (k % 2 == 0 ? 1.0 : -1.0) * c * zk;
      const double mag = std::abs(term);
      zk /= zeta;
      if (c == 0.0) continue;
      if (mag > prev) break;
      sum += term;
      last = term;
      prev = mag;
      if (mag < 1e-17 * std::abs(sum)) break;
    }
    if (std::abs(last) > std::max(ctl.target_abs_tol, 1e-10) * std::abs(sum))
      fail(ErrorCode::AccuracyLoss, "F asymptotic series did not converge");
    return std::exp(-(sigma + 1.0) * zeta) * phase * std::pow(s, 0.25) * 0.5 * sum;
  }
  const cx ai = airy_ai(s, 0, ctl);
  const cx aip = airy_ai(s, 1, ctl);
  return std::sqrt(kPi) * std::exp(-2.0 * z * z * z / 3.0) * phase * (z * ai - aip);
}

cx a_fn(double z, int derivative) {
  if (derivative < 0 || derivative > 2)
    fail(ErrorCode::InvalidArgument, "a_fn derivative must be 0, 1 or 2");
  if (!std::isfinite(z)) fail(ErrorCode::InvalidArgument, "a_fn needs finite z");
  const double phi = z > 0.0 ? kPi / 12.0 : (z < 0.0 ? -kPi / 12.0 : 0.0);
  const cx rot = std::polar(1.0, phi);
  const double decay = std::cos(3.0 * phi) / 3.0;
  const double rmax = std::cbrt(60.0 / decay);
  auto f = [&](double r) {
    const cx u = rot * r;
    const cx u2 = u * u;
    cx v = std::exp(-u2 * u / 3.0 + kI * z * u2) * u * rot;
    for (int k = 0; k < derivative; ++k) v *= kI * u2;
    return v;
  };
  std::vector<double> breaks;
  if (std::abs(z) > 1.0) {
    const double w = 1.0 / std::sqrt(std::abs(z));
    for (double m : {0.5, 1.0, 2.0, 4.0, 8.0})
      if (m * w < rmax) breaks.push_back(m * w);
  }
  breaks.push_back(1.0);
  AdaptiveOptions opt;
  opt.abs_tol = 1e-15;
  opt.rel_tol = 1e-13;
  return integrate_adaptive(f, 0.0, rmax, opt, breaks).value;
}

cx zeta_fn(cx t) {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
    fail(ErrorCode::InvalidArgument, "zeta_fn needs finite t");
  if (std::abs(t.imag()) <= 1e-14 * std::max(1.0, std::abs(t)) && t.real() >= 0.5)
    fail(ErrorCode::OnCut, "zeta_fn argument on [1/2, inf)");
  const long terms = std::max<long>(100, static_cast<long>(std::ceil(10.0 * std::abs(t))));
  cx sum = 0.0;
  for (long l = terms - 1; l >= 0; --l) sum += 1.0 / std::sqrt(cx(l + 0.5) - t);
  // Euler-Maclaurin tail from l = terms to infinity, with the counterterm.
  const cx w = cx(terms + 0.5) - t;
  const cx rw = 1.0 / std::sqrt(w);
  const cx iw = 1.0 / w;
  const cx d1 = -0.5 * rw * iw;
  const cx d3 = -(15.0 / 8.0) * rw * iw * iw * iw;
  const cx d5 = -(945.0 / 32.0) * rw * iw * iw * iw * iw * iw;
  const cx tail = -2.0 * std::sqrt(w) + 0.5 * rw -
                  ((1.0 / 6.0) / 2.0 * d1 + (-1.0 / 30.0) / 24.0 * d3 + (1.0 / 42.0) / 720.0 * d5);
  return sum + tail;
}

double f0_constant() {
  // Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k a_k,
  // a_k = (k+1)^{-3/2}.
  const int n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * std::pow(k + 1.0, -1.5);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

}  // namespace adia
