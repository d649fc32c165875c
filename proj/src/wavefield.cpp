#include "adia/wavefield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adia/branchfns.hpp"
#include "adia/quadrature.hpp"

namespace adia {

ActionEval action(const CxPoint& p, double tau, int n) {
  const cx z = p.z;
  ActionEval a;
  a.value = z * z * (1.0 - tau) - 2.0 * kPi * n * z + int_l0(p);
  a.dp = 2.0 * z * (1.0 - tau) + l0(p) - 2.0 * kPi * n;
  const bool branch_point = z.imag() == 0.0 && std::abs(z.real()) == 1.0;
  a.dpp = branch_point ? cx(std::numeric_limits<double>::infinity(), 0.0)
                       : 2.0 * (1.0 - tau) + l0_prime(p);
  return a;
}

ActionEval action_tilde(const CxPoint& p, double tau, int n, double xi) {
  ActionEval a = action(p, tau, n);
  const cx q = q0(p);
  a.value += q * xi;
  a.dp += xi * p.z / q;
  a.dpp -= xi / (q * q * q);
  return a;
}

LegendreCheck legendre_check(int n, double tau) {
  const double p = p_n(n, tau);
  const ActionEval a = action(CxPoint(p), tau, n);
  LegendreCheck c;
  c.lhs1 = tau + a.value.real();
  c.rhs1 = -int_e_n(n, tau) + 2.0 * tau_threshold(n) - 3.0;
  c.lhs2 = 1.0 / a.dpp.real();
  c.rhs2 = 0.5 * dlnpn_dtau(n, tau);
  return c;
}

const char* method_name(FieldMethod m) {
  switch (m) {
    case FieldMethod::ContourQuadrature: return "contour";
    case FieldMethod::SeriesAnsatz: return "series";
    case FieldMethod::Oracle: return "oracle";
  }
  return "unknown";
}

ContourSpec ray_contour(cx anchor, double theta, double reach) {
  ContourSpec c;
  c.kind = ContourKind::Ray;
  c.anchor = CxPoint(anchor);
  const cx d = std::polar(1.0, theta);
  c.nodes = {anchor - reach * d, anchor, anchor + reach * d};
  return c;
}

namespace {

cx saddle_point(int n, double tau, double xi) {
  return xi == 0.0 ? cx(p_n(n, tau)) : p_n_tilde(n, tau, xi);
}

double steepest_angle(int n, double tau, double xi, cx p) {
  const ActionEval a = action_tilde(CxPoint(p), tau, n, xi);
  return 0.5 * (0.5 * kPi - std::arg(a.dpp));
}

// Distance from z to the cut {x real, |x| >= 1}.
double cut_distance(cx z) {
  if (std::abs(z.real()) >= 1.0) return std::abs(z.imag());
  return std::min(std::abs(z - 1.0), std::abs(z + 1.0));
}

}  // namespace

ContourSpec saddle_ray_contour(int n, double tau, double xi) {
  const cx ps = saddle_point(n, tau, xi);
  const double theta = steepest_angle(n, tau, xi, ps);
  if (!(theta > 0.0 && theta < 0.5 * kPi))
    fail(ErrorCode::ContourClash, "saddle ray would run into the cut");
  // The lower arm must cross the real axis inside (-1, 1).
  const double cross = ps.real() - ps.imag() / std::tan(theta);
  if (std::abs(cross) > 0.999)
    fail(ErrorCode::ContourClash, "saddle ray crosses the real axis on the cut");
  ContourSpec c = ray_contour(ps, theta);
  c.kind = ContourKind::Ray;
  return c;
}

ContourSpec hugging_contour(const ModelParams& mp, double tau) {
  validate(mp);
  const double c = 1.0 - mp.eps;
  const double delta = 0.5 * mp.eps;
  const double ps = (1.0 - tau_threshold(mp.n)) / (1.0 - tau);
  const double e = std::max(ps + 0.2, c + 0.3);
  const cx d = std::polar(1.0, 0.25 * kPi);
  const double reach = 60.0;
  ContourSpec cs;
  cs.kind = ContourKind::Polyline;
  cs.anchor = CxPoint(c);
  cs.nodes = {c - reach * d, cx(c), cx(c, delta), cx(e, delta), cx(e, delta) + reach * d};
  return cs;
}

ContourSpec default_contour(const ModelParams& mp, double tau) {
  validate(mp);
  if (tau < tau_threshold(mp.n) && 1.0 - p_n(mp.n, tau) >= mp.eps)
    return saddle_ray_contour(mp.n, tau, 0.0);
  return hugging_contour(mp, tau);
}

ContourSpec trace_steepest(int n, double tau, double xi, double eps) {
  if (!(eps > 0.0)) fail(ErrorCode::InvalidArgument, "eps must be positive");
  const cx ps = saddle_point(n, tau, xi);
  const double theta = steepest_angle(n, tau, xi, ps);
  const cx s0 = action_tilde(CxPoint(ps), tau, n, xi).value;
  auto field = [&](cx p) {
    const cx sp = action_tilde(CxPoint(p), tau, n, xi).dp;
    const double m = std::abs(sp);
    if (m == 0.0) fail(ErrorCode::TraceDiverged, "trace hit a stationary point");
    return kI * std::conj(sp) / m;
  };
  const double stop = 41.4 * eps;  // Im S gain where the damping is 1e-18
  auto arm = [&](cx dir) {
    std::vector<cx> pts;
    const double h0 = 1e-3 * std::min(1.0, cut_distance(ps));
    cx p = ps + h0 * dir;
    pts.push_back(p);
    double h = 0.01;
    for (int it = 0; it < 200000; ++it) {
      if ((action_tilde(CxPoint(p), tau, n, xi).value - s0).imag() > stop) return pts;
      const double hmax = std::min(0.1, 0.25 * cut_distance(p));
      h = std::min(h, hmax);
      // RK4 with step doubling for error control.
      auto rk4 = [&](cx z, double step) {
        const cx k1 = field(z);
        const cx k2 = field(z + 0.5 * step * k1);
        const cx k3 = field(z + 0.5 * step * k2);
        const cx k4 = field(z + step * k3);
        return z + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      };
      const cx full = rk4(p, h);
      const cx half = rk4(rk4(p, 0.5 * h), 0.5 * h);
      const double err = std::abs(full - half);
      if (err > 1e-10 && h > 1e-12) {
        h *= 0.5;
        continue;
      }
      if (h <= 1e-12) fail(ErrorCode::TraceDiverged, "steepest-descent step underflow");
      p = half;
      if (cut_distance(p) < 1e-9) fail(ErrorCode::TraceDiverged, "trace ran into the cut");
      pts.push_back(p);
      if (err < 1e-12) h *= 1.5;
    }
    fail(ErrorCode::TraceDiverged, "steepest-descent trace did not terminate");
  };
  const cx d = std::polar(1.0, theta);
  std::vector<cx> up = arm(d), down = arm(-d);
  ContourSpec c;
  c.kind = ContourKind::SteepestDescent;
  c.anchor = CxPoint(ps);
  for (auto it = down.rbegin(); it != down.rend(); ++it) c.nodes.push_back(*it);
  c.nodes.push_back(ps);
  for (cx z : up) c.nodes.push_back(z);
  return c;
}

ContourField::ContourField(const ModelParams& mp, double tau, const ContourSpec& contour,
                           double x_max, bool outside)
    : mp_(mp), tau_(tau), outside_(outside) {
  validate(mp);
  const double eps = mp.eps;
  const int n = mp.n;
  std::size_t ia = contour.nodes.size();
  for (std::size_t i = 0; i < contour.nodes.size(); ++i)
    if (contour.nodes[i] == contour.anchor.z) ia = i;
  if (ia == contour.nodes.size() || ia == 0 || ia + 1 == contour.nodes.size())
    fail(ErrorCode::InvalidArgument, "contour anchor must be an interior vertex");
  const cx c = contour.anchor.z;
  const cx phi_c = action_integral_minus_l0(CxPoint(c), eps);

  const GaussRule& g = gauss_rule(16);
  const auto& w_cum = gauss_cumulative_matrix(16);
  const double floor = 1e-18;

  for (int sgn : {+1, -1}) {
    std::vector<cx> verts;
    if (sgn > 0) {
      verts.assign(contour.nodes.begin() + static_cast<long>(ia), contour.nodes.end());
    } else {
      for (std::size_t i = ia + 1; i-- > 0;) verts.push_back(contour.nodes[i]);
    }
    cx phi = phi_c;
    double peak = 0.0;
    long panels = 0;
    bool done = false;
    for (std::size_t s = 0; s + 1 < verts.size() && !done; ++s) {
      const cx va = verts[s], vb = verts[s + 1];
      const double len = std::abs(vb - va);
      const cx dir = (vb - va) / len;
      const bool last = s + 2 == verts.size();
      double pos = 0.0;
      while (pos < len) {
        const cx a = va + pos * dir;
        const ActionEval ae = action(CxPoint(a), tau, n);
        double h = std::min({0.25, 0.8 * cut_distance(a),
                             6.0 * eps / (std::abs(ae.dp) + eps * x_max + 1e-12)});
        if (h < 1e-7) fail(ErrorCode::ContourClash, "contour passes too close to the cut");
        h = std::min(h, len - pos);
        if (len - pos - h < 0.1 * h) h = len - pos;
        const cx b = a + h * dir;
        const cx mid = 0.5 * (a + b), half = 0.5 * (b - a);
        std::vector<cx> nodes(16), dvals(16);
        for (int j = 0; j < 16; ++j) {
          nodes[j] = mid + half * g.x[j];
          dvals[j] = big_l0_minus_l0(nodes[j], eps);
        }
        double panel_max = 0.0;
        for (int j = 0; j < 16; ++j) {
          cx cum = 0.0;
          for (int k = 0; k < 16; ++k) cum += w_cum[j][k] * dvals[k];
          const cx phi_j = phi + half * cum;
          const cx pj = nodes[j];
          const cx weight = double(sgn) * half * g.w[j];
          cx expo;
          cx extra = 1.0;
          if (!outside) {
            expo = kI / eps * (action(CxPoint(pj), tau, n).value + phi_j);
          } else {
            // Phi(p - eps/2) + (eps/2) l0(p) + p^2 (1 - tau) - 2 pi n p, where
            // Phi is the full integral of L0.
            const cx full = phi_j + int_l0(pj);
            const cx lo = pj - 0.5 * eps;
            cx back = 0.0;
            for (int k = 0; k < 16; ++k) {
              const cx z = 0.5 * (lo + pj) + 0.25 * eps * g.x[k];
              back += g.w[k] * big_l0(CxPoint(z), eps).value;
            }
            back *= 0.25 * eps;
            expo = kI / eps *
                   (full - back + 0.5 * eps * l0(pj) + pj * pj * (1.0 - tau) -
                    2.0 * kPi * n * pj);
            extra = pj;
          }
          const cx gj = weight * extra * std::exp(expo);
          p_.push_back(pj);
          g_.push_back(gj);
          const double mag = std::abs(gj) * std::exp(std::abs(pj.imag()) * (outside ? 0.0 : x_max));
          panel_max = std::max(panel_max, mag);
        }
        phi += half * [&] {
          cx acc = 0.0;
          for (int j = 0; j < 16; ++j) acc += g.w[j] * dvals[j];
          return acc;
        }();
        peak = std::max(peak, panel_max);
        pos += h;
        if (++panels > 200000) fail(ErrorCode::QuadratureFailure, "contour needs too many panels");
        if (last && panel_max < floor * peak) {
          done = true;
          break;
        }
        if (last && pos >= len) tail_ += panel_max;
      }
    }
  }
}

FieldSample ContourField::inside(double x) const {
  if (outside_) fail(ErrorCode::InvalidArgument, "field was built for the exterior");
  const double eps = mp_.eps;
  const double t = tau_ / eps;
  cx acc = 0.0;
  double mass = 0.0;
  for (std::size_t j = 0; j < p_.size(); ++j) {
    const cx v = g_[j] * std::sin(p_[j] * x);
    acc += v;
    mass += std::abs(v);
  }
  const cx pref = std::polar(1.0 / std::sqrt(eps * kPi), std::fmod(t, 2.0 * kPi));
  FieldSample s;
  s.point = {x, t};
  s.psi = pref * acc;
  s.method = FieldMethod::ContourQuadrature;
  s.est_error = std::abs(pref) * (1e-15 * mass + tail_);
  return s;
}

FieldSample ContourField::outside(double x) const {
  if (!outside_) fail(ErrorCode::InvalidArgument, "field was built for the interior");
  const double eps = mp_.eps;
  const double t = tau_ / eps;
  const double xi = eps * (x - (1.0 - tau_));
  if (xi < -1e-12) fail(ErrorCode::InvalidArgument, "exterior evaluation needs x >= 1 - tau");
  cx acc = 0.0;
  double mass = 0.0;
  for (std::size_t j = 0; j < p_.size(); ++j) {
    const cx v = g_[j] * std::exp(kI / eps * q0(CxPoint(p_[j])) * std::max(0.0, xi));
    acc += v;
    mass += std::abs(v);
  }
  const double sign = (mp_.n % 2 == 1) ? 1.0 : -1.0;
  const double phase = std::fmod(t, 2.0 * kPi) - 0.5 * xi - 0.25 * eps * (1.0 - tau_);
  const cx pref = sign * std::polar(1.0 / std::sqrt(eps * kPi), phase);
  FieldSample s;
  s.point = {x, t};
  s.psi = pref * acc;
  s.method = FieldMethod::ContourQuadrature;
  s.est_error = std::abs(pref) * (1e-15 * mass + tail_);
  return s;
}

namespace {

void check_point_in_range(const ModelParams& mp, double x, double t) {
  validate(mp);
  if (!std::isfinite(x) || !std::isfinite(t)) fail(ErrorCode::InvalidArgument, "non-finite x or t");
  if (mp.eps * t > 1.0) fail(ErrorCode::InvalidArgument, "eps * t must not exceed 1");
  if (x < 0.0) fail(ErrorCode::InvalidArgument, "x must be >= 0");
}

}  // namespace

FieldSample psi_n_inside(const ModelParams& mp, double x, double t, const ContourSpec& c) {
  check_point_in_range(mp, x, t);
  const double tau = mp.eps * t;
  if (x > 1.0 - tau + 1e-12) fail(ErrorCode::InvalidArgument, "x lies outside the well");
  return ContourField(mp, tau, c, 1.0 - tau).inside(x);
}

FieldSample psi_n_inside(const ModelParams& mp, double x, double t) {
  check_point_in_range(mp, x, t);
  return psi_n_inside(mp, x, t, default_contour(mp, mp.eps * t));
}

FieldSample psi_n_outside(const ModelParams& mp, double x, double t) {
  check_point_in_range(mp, x, t);
  const double tau = mp.eps * t;
  const double xi = mp.eps * (x - (1.0 - tau));
  if (xi < -1e-12) fail(ErrorCode::InvalidArgument, "x lies inside the well");
  ContourSpec c;
  if (tau < tau_threshold(mp.n) && 1.0 - p_n(mp.n, tau) >= mp.eps) {
    try {
      c = saddle_ray_contour(mp.n, tau, std::max(0.0, xi));
    } catch (const Error&) {
      c = saddle_ray_contour(mp.n, tau, 0.0);
    }
  } else {
    c = hugging_contour(mp, tau);
  }
  return ContourField(mp, tau, c, 0.0, true).outside(x);
}

cx generating_series(double eps, double x, double t, double p, int l_max) {
  if (!(eps > 0.0 && eps < 1.0)) fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1)");
  if (eps * t > 1.0) fail(ErrorCode::InvalidArgument, "eps * t must not exceed 1");
  if (l_max <= 0) l_max = default_l_max(eps);
  const long shift = std::lround(p / eps);
  const double pb = p - eps * shift;
  const RLine line = r_line(pb, eps, l_max);
  const double tau = eps * t;
  const double dt = t - 1.0 / eps;
  cx acc = 0.0;
  if (x <= 1.0 - tau) {
    for (int l = -l_max; l <= l_max; ++l) {
      const double k = pb + eps * l;
      acc += std::exp(-kI * (k * k * dt)) * std::sin(k * x) * line.at(l);
    }
    return std::polar(1.0, std::fmod(t, 2.0 * kPi)) * acc / std::sqrt(kPi);
  }
  const cx e1 = std::polar(1.0, std::fmod(1.0 / eps, 2.0 * kPi));
  for (int l = -l_max; l <= l_max; ++l) {
    const double q = pb + eps * l + 0.5 * eps;
    const cx qq = q_real(q);
    const cx p1 = -0.5 * eps + qq;
    const cx tr = -kI * q * e1 / (qq + q);
    acc += std::exp(-kI * p1 * p1 * dt + kI * p1 * x) * tr * line.at(l);
  }
  return acc / std::sqrt(kPi);
}

SeriesField::SeriesField(double eps, int nodes_per_piece) : eps_(eps) {
  if (!(eps > 0.0 && eps < 1.0)) fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1)");
  const GaussRule& g = gauss_rule(nodes_per_piece);
  auto mod = [&](double v) {
    double r = std::fmod(v, eps);
    return r < 0.0 ? r + eps : r;
  };
  double s0 = mod(1.0 + 0.5 * eps), s1 = mod(-1.0 - 0.5 * eps);
  if (s1 < s0) std::swap(s0, s1);
  const double pts[3] = {s0, s1, s0 + eps};
  const int l_max = default_l_max(eps);
  const cx e1 = std::polar(1.0, std::fmod(1.0 / eps, 2.0 * kPi));
  for (int piece = 0; piece < 2; ++piece) {
    const double a = pts[piece], b = pts[piece + 1];
    if (b - a <= 0.0) continue;
    for (std::size_t j = 0; j < g.x.size(); ++j) {
      // p = a + (b - a) sin^2(pi v / 2) clusters nodes at the square-root
      // singularities on both ends.
      const double v = 0.5 * (g.x[j] + 1.0);
      const double sv = std::sin(0.5 * kPi * v);
      const double p = a + (b - a) * sv * sv;
      const double wq = 0.5 * g.w[j] * (b - a) * 0.5 * kPi * std::sin(kPi * v);
      const long shift = std::lround(p / eps);
      const double pb = p - eps * shift;
      const RLine line = r_line(pb, eps, l_max);
      for (int l = -l_max; l <= l_max; ++l) {
        const double k = pb + eps * l;
        const double q = k + 0.5 * eps;
        const cx qq = q_real(q);
        k_.push_back(k);
        c_.push_back(wq * line.at(l));
        p_.push_back(p);
        q_.push_back(qq);
        p1_.push_back(-0.5 * eps + qq);
        tr_.push_back(-kI * q * e1 / (qq + q));
      }
    }
  }
}

FieldSample SeriesField::psi(int n, double x, double t, Side side) const {
  const double eps = eps_;
  if (eps * t > 1.0) fail(ErrorCode::InvalidArgument, "eps * t must not exceed 1");
  if (x < 0.0) fail(ErrorCode::InvalidArgument, "x must be >= 0");
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  const double tau = eps * t;
  const double dt = t - 1.0 / eps;
  cx acc = 0.0;
  double mass = 0.0;
  const bool in = side == Side::Auto ? x <= 1.0 - tau : side == Side::Inside;
  for (std::size_t j = 0; j < k_.size(); ++j) {
    const double four = std::fmod(2.0 * kPi * n * p_[j] / eps, 2.0 * kPi);
    cx v;
    if (in) {
      const double k = k_[j];
      const double ph = std::fmod(k * k * dt, 2.0 * kPi);
      v = c_[j] * std::polar(1.0, -ph - four) * std::sin(k * x);
    } else {
      const cx p1 = p1_[j];
      v = c_[j] * tr_[j] * std::exp(-kI * p1 * p1 * dt + kI * p1 * x - kI * four);
    }
    acc += v;
    mass += std::abs(v);
  }
  const double norm = 1.0 / std::sqrt(kPi * eps);
  FieldSample s;
  s.point = {x, t};
  s.method = FieldMethod::SeriesAnsatz;
  s.psi = in ? std::polar(norm, std::fmod(t, 2.0 * kPi)) * acc : norm * acc;
  s.est_error = norm * 1e-14 * mass;
  return s;
}

}  // namespace adia
