#include "adia/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "adia/parallel.hpp"
#include "adia/wavefield.hpp"

namespace adia {

const char* snap_name(SnapPolicy s) {
  return s == SnapPolicy::CellAverage ? "cell-average" : "nearest-node";
}

void validate(const GridSpec& g) {
  if (!(g.x_max > 0.0) || !std::isfinite(g.x_max))
    fail(ErrorCode::InvalidArgument, "x_max must be positive");
  if (g.nx < 4) fail(ErrorCode::InvalidArgument, "nx must be >= 4");
  if (!(g.dt > 0.0) || !std::isfinite(g.dt)) fail(ErrorCode::InvalidArgument, "dt must be positive");
}

std::vector<double> node_potential(const GridSpec& g, double tau) {
  validate(g);
  const double edge = 1.0 - tau;
  const double h = g.dx();
  std::vector<double> v(static_cast<std::size_t>(g.nx) + 1, 0.0);
  for (int i = 0; i <= g.nx; ++i) {
    const double x = i * h;
    if (g.snap == SnapPolicy::NearestNode) {
      v[i] = x <= edge ? -1.0 : 0.0;
    } else {
      // Fraction of the dual cell [x - h/2, x + h/2] lying inside the well.
      const double lo = x - 0.5 * h, hi = x + 0.5 * h;
      const double inside = std::clamp(edge, lo, hi) - lo;
      v[i] = -inside / h;
    }
  }
  return v;
}

CrankNicolson::CrankNicolson(const GridSpec& g, double eps, std::optional<double> frozen_tau)
    : grid_(g), eps_(eps), frozen_tau_(frozen_tau) {
  validate(g);
  if (!(eps > 0.0 && eps < 1.0)) fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1)");
}

WaveVector CrankNicolson::step(const WaveVector& s, double dt) const {
  const int nx = grid_.nx;
  if (s.values.size() != static_cast<std::size_t>(nx) + 1)
    fail(ErrorCode::InvalidArgument, "state size does not match the grid");
  const double h = grid_.dx();
  const double tau = frozen_tau_ ? *frozen_tau_ : eps_ * (s.time + 0.5 * dt);
  const std::vector<double> v = node_potential(grid_, tau);
  // (1 + i dt/2 H) psi' = (1 - i dt/2 H) psi with H = -D2 + v on interior nodes.
  const cx a = cx(0.0, 0.5 * dt);
  const double inv_h2 = 1.0 / (h * h);
  const std::size_t m = static_cast<std::size_t>(nx) - 1;
  std::vector<cx> rhs(m), diag(m);
  const cx off = -a * inv_h2;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = k + 1;
    const double hd = 2.0 * inv_h2 + v[i];
    const cx hpsi = hd * s.values[i] - inv_h2 * (s.values[i - 1] + s.values[i + 1]);
    rhs[k] = s.values[i] - a * hpsi;
    diag[k] = 1.0 + a * hd;
  }
  // Thomas algorithm with constant off-diagonals.
  std::vector<cx> cp(m);
  cx denom = diag[0];
  if (std::abs(denom) < 1e-300) fail(ErrorCode::LinearSolveFailure, "zero pivot");
  cp[0] = off / denom;
  rhs[0] /= denom;
  for (std::size_t k = 1; k < m; ++k) {
    denom = diag[k] - off * cp[k - 1];
    if (std::abs(denom) < 1e-300 || !std::isfinite(denom.real()) || !std::isfinite(denom.imag()))
      fail(ErrorCode::LinearSolveFailure, "zero pivot");
    cp[k] = off / denom;
    rhs[k] = (rhs[k] - off * rhs[k - 1]) / denom;
  }
  for (std::size_t k = m - 1; k-- > 0;) rhs[k] -= cp[k] * rhs[k + 1];
  WaveVector out;
  out.time = s.time + dt;
  out.values.assign(static_cast<std::size_t>(nx) + 1, 0.0);
  std::copy(rhs.begin(), rhs.end(), out.values.begin() + 1);
  return out;
}

WaveVector CrankNicolson::propagate(WaveVector s, double t_end, long* steps_taken) const {
  const double span = t_end - s.time;
  if (span < 0.0) fail(ErrorCode::InvalidArgument, "t_end precedes the state time");
  const long steps = span == 0.0 ? 0 : static_cast<long>(std::ceil(span / grid_.dt - 1e-9));
  const double t_start = s.time;
  for (long j = 0; j < steps; ++j) {
    s = step(s, span / steps);
    s.time = t_start + span * (j + 1) / steps;
  }
  if (steps_taken) *steps_taken = steps;
  return s;
}

double l2_norm(const WaveVector& s, double dx) {
  double acc = 0.0;
  for (const cx& v : s.values) acc += std::norm(v);
  return std::sqrt(acc * dx);
}

WaveVector sample_exact(const ModelParams& mp, double t, const GridSpec& g) {
  validate(mp);
  validate(g);
  static thread_local std::unique_ptr<SeriesField> cache;
  if (!cache || cache->eps() != mp.eps) cache = std::make_unique<SeriesField>(mp.eps);
  const SeriesField& sf = *cache;
  WaveVector w;
  w.time = t;
  w.values.assign(static_cast<std::size_t>(g.nx) + 1, 0.0);
  const double h = g.dx();
  parallel_for(static_cast<std::size_t>(g.nx) - 1, [&](std::size_t k) {
    const std::size_t i = k + 1;
    w.values[i] = sf.psi(mp.n, i * h, t).psi;
  });
  return w;
}

OracleReport propagate_and_compare(const ModelParams& mp, double t0, double t1,
                                   const GridSpec& g) {
  validate(mp);
  validate(g);
  if (!(t0 <= t1)) fail(ErrorCode::InvalidArgument, "t0 must not exceed t1");
  if (mp.eps * t1 > 1.0) fail(ErrorCode::InvalidArgument, "eps * t1 must not exceed 1");
  const auto start = std::chrono::steady_clock::now();
  const WaveVector init = sample_exact(mp, t0, g);
  const WaveVector target = t1 == t0 ? init : sample_exact(mp, t1, g);
  CrankNicolson cn(g, mp.eps);
  OracleReport rep;
  const WaveVector fin = cn.propagate(init, t1, &rep.steps);
  const double h = g.dx();
  double diff = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < fin.values.size(); ++i) {
    diff += std::norm(fin.values[i] - target.values[i]);
    ref += std::norm(target.values[i]);
  }
  if (!(ref > 0.0)) fail(ErrorCode::AccuracyLoss, "reference field vanishes on the grid");
  rep.deviation = std::sqrt(diff / ref);
  rep.norm_drift = std::abs(l2_norm(fin, h) / l2_norm(init, h) - 1.0);
  const std::size_t tail = fin.values.size() - fin.values.size() / 20;
  for (std::size_t i = tail; i < fin.values.size(); ++i)
    rep.boundary_amplitude = std::max(rep.boundary_amplitude, std::abs(fin.values[i]));
  rep.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace adia
