#include "adia/symbolfield.hpp"

#include <algorithm>
#include <cmath>

#include "adia/branchfns.hpp"

namespace adia {

namespace {

constexpr double kSMax = 12.0;
constexpr double kStep = 0.08;

struct Kernel {
  std::vector<double> s, w;
};

// Trapezoid nodes and weights of (pi/2) sech^2(pi s) on [-12, 12]. The
// integrand is analytic in |Im s| < 1/2, so the error is about exp(-pi/h).
const Kernel& kernel() {
  static const Kernel k = [] {
    Kernel out;
    const int m = static_cast<int>(std::lround(kSMax / kStep));
    for (int j = -m; j <= m; ++j) {
      const double s = j * kStep;
      const double c = std::cosh(kPi * s);
      out.s.push_back(s);
      out.w.push_back(0.5 * kPi * kStep / (c * c));
    }
    return out;
  }();
  return k;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1)");
}

// l0' at a point that may sit on the real axis beyond +-1, where the side
// is taken from `tag`.
cx l0p_at(cx z, Limit tag) {
  if (z.imag() == 0.0 && std::abs(z.real()) >= 1.0) {
    if (std::abs(z.real()) == 1.0) fail(ErrorCode::PoleAt, "L0 singular point");
    if (tag == Limit::None) fail(ErrorCode::BranchViolation, "untagged point on the cut");
    return l0_prime(CxPoint(z, Sheet::C0, tag));
  }
  return l0_prime(CxPoint(z));
}

cx l1p_at(cx z, Limit tag) {
  if (z.imag() == 0.0 && z.real() <= 1.0) {
    if (z.real() == 1.0) fail(ErrorCode::PoleAt, "L1 singular point");
    if (tag == Limit::None) fail(ErrorCode::BranchViolation, "untagged point on the C1 cut");
    return l1_prime(CxPoint(z, Sheet::C1, tag));
  }
  return l1_prime(CxPoint(z, Sheet::C1));
}

struct Direct {
  cx value;
  double bound;
};

// Straight line through q with |Re q| inside the central band.
Direct direct_l0(cx q, double eps, bool subtract) {
  const Kernel& k = kernel();
  const cx base = subtract ? l0(q) : cx(0.0);
  cx acc = 0.0;
  double big = 0.0;
  for (std::size_t j = 0; j < k.s.size(); ++j) {
    const cx v = l0(q + kI * (eps * k.s[j]));
    big = std::max(big, std::abs(v));
    acc += k.w[j] * (v - base);
  }
  return {acc, 1e-16 * (1.0 + big)};
}

Direct direct_l1(cx q, double eps) {
  const Kernel& k = kernel();
  cx acc = 0.0;
  double big = 0.0;
  for (std::size_t j = 0; j < k.s.size(); ++j) {
    const cx v = l1(CxPoint(q + kI * (eps * k.s[j]), Sheet::C1));
    big = std::max(big, std::abs(v));
    acc += k.w[j] * v;
  }
  return {acc, 1e-16 * (1.0 + big)};
}

struct Shift {
  cx q;         // point inside the band
  cx sum;       // eps * sum of l0' at midpoints, signed
  int steps;
};

Shift shift_to_band(const CxPoint& p, double eps) {
  const double lim = 1.0 - 0.5 * eps;
  const double x = p.z.real();
  if (std::abs(x) <= lim) return {p.z, 0.0, 0};
  const double sg = x > 0.0 ? 1.0 : -1.0;
  const int k = static_cast<int>(std::ceil((std::abs(x) - lim) / eps));
  const cx q = p.z - sg * k * eps;
  cx sum = 0.0;
  for (int j = 0; j < k; ++j) sum += l0p_at(q + sg * eps * (j + 0.5), p.limit);
  return {q, sg * eps * sum, k};
}

cx kernel_weight(cx p, cx zeta, double eps) {
  const cx c = std::cos(kPi * (p - zeta) / eps);
  return kPi / (2.0 * kI * eps) / (c * c);
}

QuadratureReport bent_l0(const CxPoint& p, double eps) {
  const ContourSpec cs = bent_contour(p, eps);
  QuadratureReport rep;
  AdaptiveOptions opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-14;
  for (std::size_t i = 0; i + 1 < cs.nodes.size(); ++i) {
    const cx a = cs.nodes[i], b = cs.nodes[i + 1];
    auto f = [&](double s) {
      const cx z = a + (b - a) * s;
      return kernel_weight(p.z, z, eps) * l0(z) * (b - a);
    };
    // Refine near the anchor where the kernel peaks.
    std::vector<double> breaks;
    for (double d : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double len = std::abs(b - a);
      const double da = d * eps / len, db = 1.0 - d * eps / len;
      if (std::abs(a - p.z) < 1e-12 && da < 1.0) breaks.push_back(da);
      if (std::abs(b - p.z) < 1e-12 && db > 0.0) breaks.push_back(db);
    }
    const QuadratureReport r = integrate_adaptive(f, 0.0, 1.0, opt, breaks);
    rep.value += r.value;
    rep.est_error += r.est_error;
    rep.nodes_used += r.nodes_used;
  }
  return rep;
}

}  // namespace

ContourSpec bent_contour(const CxPoint& p, double eps) {
  check_eps(eps);
  check_point(p);
  ContourSpec cs;
  cs.kind = ContourKind::BentVertical;
  cs.anchor = p;
  cs.truncation_height = kSMax;
  cs.clearance = 0.25 * eps;
  const double h = kSMax * eps;
  const double x = p.z.real(), y = p.z.imag();
  const cx top = p.z + kI * h, bottom = p.z - kI * h;
  if (std::abs(x) < 1.0 - cs.clearance) {
    cs.kind = ContourKind::VerticalLine;
    cs.nodes = {bottom, p.z, top};
    return cs;
  }
  if (y == 0.0)
    fail(ErrorCode::ContourClash, "no vertical contour through a point on the cut");
  const double xc = (x > 0.0 ? 1.0 : -1.0) * (1.0 - cs.clearance);
  const double drop = std::abs(x - xc);
  // The 45 degree leg must reach the band before it meets the real axis.
  if (std::abs(y) - drop < cs.clearance)
    fail(ErrorCode::ContourClash, "point too close to the cut for a bent contour");
  const double up = y > 0.0 ? -1.0 : 1.0;  // direction of the bent leg in Im
  const cx corner(xc, y + up * drop);
  const cx far(xc, y + up * std::max(h, drop + eps));
  if (y > 0.0)
    cs.nodes = {far, corner, p.z, top};
  else
    cs.nodes = {bottom, p.z, corner, far};
  return cs;
}

QuadratureReport big_l0(const CxPoint& p, double eps, L0Method method) {
  check_eps(eps);
  check_point(p);
  if (p.sheet != Sheet::C0) fail(ErrorCode::InvalidArgument, "big_l0 needs a C0 point");
  const double lim = 1.0 - 0.5 * eps;
  if (method == L0Method::Bent) return bent_l0(p, eps);
  if (method == L0Method::Direct && std::abs(p.z.real()) > lim)
    fail(ErrorCode::ContourClash, "straight contour would cross the cut");
  const Shift sh = shift_to_band(p, eps);
  const Direct d = direct_l0(sh.q, eps, false);
  QuadratureReport rep;
  rep.value = d.value + sh.sum;
  rep.est_error = d.bound * (1 + sh.steps);
  rep.nodes_used = static_cast<long>(kernel().s.size()) + sh.steps;
  return rep;
}

cx big_l0_minus_l0(cx p, double eps) {
  check_eps(eps);
  const CxPoint pt(p);
  check_point(pt);
  const Shift sh = shift_to_band(pt, eps);
  const Direct d = direct_l0(sh.q, eps, true);
  if (sh.steps == 0) return d.value;
  return d.value + (l0(sh.q) - l0(p)) + sh.sum;
}

QuadratureReport big_l1(const CxPoint& p, double eps) {
  check_eps(eps);
  const CxPoint pc(p.z, Sheet::C1, p.limit);
  check_point(pc);
  const double lim = 1.0 + 0.5 * eps;
  cx q = p.z, sum = 0.0;
  int k = 0;
  if (p.z.real() < lim) {
    k = static_cast<int>(std::ceil((lim - p.z.real()) / eps));
    q = p.z + double(k) * eps;
    for (int j = 0; j < k; ++j) sum += l1p_at(p.z + eps * (j + 0.5), p.limit);
  }
  const Direct d = direct_l1(q, eps);
  QuadratureReport rep;
  rep.value = d.value - eps * sum;
  rep.est_error = d.bound * (1 + k);
  rep.nodes_used = static_cast<long>(kernel().s.size()) + k;
  return rep;
}

cx periodic_p(cx p, double eps) {
  if (!(p.imag() > 0.0)) fail(ErrorCode::InvalidArgument, "periodic_p needs Im p > 0");
  return big_l0(CxPoint(p), eps).value - big_l1(CxPoint(p, Sheet::C1), eps).value;
}

std::vector<cx> periodic_p_fourier(double eps, int k_max) {
  check_eps(eps);
  const int m = 64;
  if (k_max < 1 || k_max > m / 2) fail(ErrorCode::InvalidArgument, "k_max out of range");
  std::vector<cx> samples(m);
  const double a = 1.0 + 0.5 * eps;
  for (int j = 0; j < m; ++j) samples[j] = periodic_p(cx(a + eps * j / m, eps), eps);
  std::vector<cx> out;
  for (int k = 1; k <= k_max; ++k) {
    cx acc = 0.0;
    for (int j = 0; j < m; ++j)
      acc += samples[j] * std::polar(1.0, -2.0 * kPi * k * j / m);
    // Sampling at Im p = eps multiplies the k-th harmonic by exp(-2 pi k).
    out.push_back(acc / double(m) * std::exp(2.0 * kPi * k));
  }
  return out;
}

namespace {

cx integrate_segment(cx a, cx b, double eps, bool subtract, Limit tag) {
  auto f = [&](double s) {
    const cx z = a + (b - a) * s;
    if (subtract) return big_l0_minus_l0(z, eps) * (b - a);
    const bool on_cut = z.imag() == 0.0 && std::abs(z.real()) >= 1.0;
    return big_l0(CxPoint(z, Sheet::C0, on_cut ? tag : Limit::None), eps).value * (b - a);
  };
  AdaptiveOptions opt;
  opt.abs_tol = 1e-13 * eps;
  opt.rel_tol = 1e-13;
  return integrate_adaptive(f, 0.0, 1.0, opt).value;
}

cx path_integral(const CxPoint& p, double eps, bool subtract) {
  check_eps(eps);
  check_point(p);
  const double x = p.z.real();
  if (p.limit != Limit::None && std::abs(x) >= 1.0) {
    if (subtract) fail(ErrorCode::InvalidArgument, "amplitude needs an interior point");
    const double side = p.limit == Limit::PlusI0 ? 0.5 : -0.5;
    const cx mid(x, side);
    return integrate_segment(0.0, mid, eps, false, p.limit) +
           integrate_segment(mid, p.z, eps, false, p.limit);
  }
  return integrate_segment(0.0, p.z, eps, subtract, Limit::None);
}

}  // namespace

cx action_integral(const CxPoint& p, double eps) { return path_integral(p, eps, false); }

cx action_integral_minus_l0(const CxPoint& p, double eps) {
  return path_integral(p, eps, true);
}

cx r0(const CxPoint& p, double eps) {
  return std::exp(kI / eps * action_integral(p, eps));
}

cx amplitude_a(const CxPoint& p, double eps) {
  return std::exp(kI / eps * path_integral(p, eps, true));
}

int default_l_max(double eps) { return static_cast<int>(2.0 / eps) + 40; }

RLine r_line(double p_base, double eps, int l_max) {
  check_eps(eps);
  if (std::abs(p_base) > 0.5 * eps * (1.0 + 1e-12))
    fail(ErrorCode::InvalidArgument, "r_line base must lie in [-eps/2, eps/2]");
  RLine out;
  out.p_base = p_base;
  out.l_max = l_max;
  out.values.assign(static_cast<std::size_t>(2 * l_max + 1), 0.0);
  const cx r = r0(CxPoint(p_base), eps);
  out.values[l_max] = r;
  cx up = r, down = r;
  double peak = std::abs(r);
  for (int l = 1; l <= l_max; ++l) {
    up *= rho_real(p_base + eps * (l - 0.5));
    down /= rho_real(p_base - eps * (l - 0.5));
    out.values[l_max + l] = up;
    out.values[l_max - l] = down;
    peak = std::max({peak, std::abs(up), std::abs(down)});
  }
  const double tail = std::max(std::abs(up), std::abs(down));
  if (tail > 1e-14 * peak)
    fail(ErrorCode::TruncationTooSmall, "R has not decayed at l_max");
  return out;
}

cx r_boundary(double p, double eps) {
  check_eps(eps);
  if (!std::isfinite(p)) fail(ErrorCode::InvalidArgument, "p must be finite");
  const long l = std::lround(p / eps);
  const double pb = p - eps * l;
  cx r = r0(CxPoint(pb), eps);
  for (long j = 1; j <= l; ++j) r *= rho_real(pb + eps * (j - 0.5));
  for (long j = 1; j <= -l; ++j) r /= rho_real(pb - eps * (j - 0.5));
  return r;
}

}  // namespace adia
