#include "adia/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace adia {

namespace {

template <unsigned N>
GaussRule make_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  GaussRule r;
  // Boost stores the non-negative half; unfold to the full symmetric rule.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0.0) continue;
    r.x.push_back(-a[i]);
    r.w.push_back(w[i]);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.x.push_back(a[i]);
    r.w.push_back(w[i]);
  }
  return r;
}

std::vector<std::vector<double>> make_cumulative(int order) {
  const GaussRule& g = gauss_rule(order);
  const int n = order;
  using boost::math::legendre_p;
  // Vinv[k][j] = (2k+1)/2 w_j P_k(x_j) recovers Legendre coefficients.
  std::vector<std::vector<double>> vinv(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      vinv[k][j] = 0.5 * (2 * k + 1) * g.w[j] * legendre_p(k, g.x[j]);
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    const double x = g.x[i];
    std::vector<double> iv(n);
    iv[0] = x + 1.0;
    for (int k = 1; k < n; ++k)
      iv[k] = (legendre_p(k + 1, x) - legendre_p(k - 1, x)) / (2 * k + 1);
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += iv[k] * vinv[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

struct Segment {
  double a, b;
  cx value;
  double err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const CxFn& f, double a, double b) {
  using K = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  const auto& xk = K::abscissa();
  const auto& wk = K::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const cx fc = f(c);
  cx k = fc * wk[0];
  cx g = fc * wg[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const cx s = f(c - h * xk[i]) + f(c + h * xk[i]);
    k += wk[i] * s;
    // Gauss nodes sit at the even Kronrod positions.
    if (i % 2 == 0) g += wg[i / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

QuadratureReport run_adaptive(const CxFn& f, double a, double b,
                              const AdaptiveOptions& opt,
                              const std::vector<double>& breaks, bool& ok) {
  std::vector<double> pts{a};
  for (double x : breaks)
    if (x > std::min(a, b) && x < std::max(a, b)) pts.push_back(x);
  std::sort(pts.begin() + 1, pts.end());
  if (b < a) std::reverse(pts.begin() + 1, pts.end());
  pts.push_back(b);

  std::priority_queue<Segment> heap;
  QuadratureReport rep;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Segment s = gk15(f, pts[i], pts[i + 1]);
    rep.nodes_used += 15;
    heap.push(s);
  }
  auto totals = [&]() {
    cx v = 0.0;
    double e = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().err;
      copy.pop();
    }
    return std::make_pair(v, e);
  };
  cx value;
  double err;
  std::tie(value, err) = totals();
  int intervals = static_cast<int>(heap.size());
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
    if (intervals >= opt.max_intervals) break;
    Segment s = heap.top();
    heap.pop();
    const double m = 0.5 * (s.a + s.b);
    if (m == s.a || m == s.b) {
      heap.push(s);
      break;
    }
    Segment l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    rep.nodes_used += 30;
    value += l.value + r.value - s.value;
    err += l.err + r.err - s.err;
    heap.push(l);
    heap.push(r);
    ++intervals;
    // Refresh the running sums now and then to shed cancellation drift.
    if (intervals % 64 == 0) std::tie(value, err) = totals();
  }
  std::tie(value, err) = totals();
  ok = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
  rep.value = value;
  rep.est_error = err;
  return rep;
}

}  // namespace

const GaussRule& gauss_rule(int order) {
  static const GaussRule r8 = make_rule<8>();
  static const GaussRule r16 = make_rule<16>();
  static const GaussRule r24 = make_rule<24>();
  static const GaussRule r32 = make_rule<32>();
  static const GaussRule r48 = make_rule<48>();
  static const GaussRule r64 = make_rule<64>();
  switch (order) {
    case 8: return r8;
    case 16: return r16;
    case 24: return r24;
    case 32: return r32;
    case 48: return r48;
    case 64: return r64;
    default: break;
  }
  fail(ErrorCode::InvalidArgument, "unsupported Gauss order");
}

const std::vector<std::vector<double>>& gauss_cumulative_matrix(int order) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_cumulative(order)).first;
  return it->second;
}

QuadratureReport integrate_adaptive(const CxFn& f, double a, double b,
                                    const AdaptiveOptions& opt,
                                    const std::vector<double>& breaks) {
  bool ok = false;
  QuadratureReport r = run_adaptive(f, a, b, opt, breaks, ok);
  if (!ok)
    fail(ErrorCode::QuadratureFailure,
         "adaptive Gauss-Kronrod did not reach tolerance (est. error " +
             std::to_string(r.est_error) + ")");
  return r;
}

QuadratureReport integrate_adaptive_nothrow(const CxFn& f, double a, double b,
                                            const AdaptiveOptions& opt,
                                            const std::vector<double>& breaks) {
  bool ok = false;
  return run_adaptive(f, a, b, opt, breaks, ok);
}

}  // namespace adia
