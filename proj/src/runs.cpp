#include "adia/runs.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "adia/asymptotics.hpp"
#include "adia/branchfns.hpp"
#include "adia/parallel.hpp"
#include "adia/specialfns.hpp"
#include "adia/symbolfield.hpp"

namespace adia {

std::size_t Table::column_index(const std::string& column) const {
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (columns[j] == column) return j;
  fail(ErrorCode::InvalidArgument, "unknown column " + column);
}

double Table::number(std::size_t row, const std::string& column) const {
  if (row >= rows.size()) fail(ErrorCode::InvalidArgument, "row index out of range");
  const Cell& c = rows[row].at(column_index(column));
  if (const double* v = std::get_if<double>(&c)) return *v;
  fail(ErrorCode::InvalidArgument, "column " + column + " is not numeric");
}

double fitted_order(const std::vector<double>& eps, const std::vector<double>& err) {
  if (eps.size() != err.size() || eps.size() < 2)
    fail(ErrorCode::InvalidArgument, "order fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double x = std::log(eps[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace {

std::vector<double> linspace(double a, double b, int steps) {
  if (steps < 1) fail(ErrorCode::InvalidArgument, "steps must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[i] = steps == 1 ? a : a + (b - a) * i / (steps - 1);
  return out;
}

std::vector<double> eps_or(const CheckParams& p, std::vector<double> def) {
  const std::vector<double>& e = p.eps.empty() ? def : p.eps;
  for (double v : e)
    if (!(v > 0.0 && v < 1.0)) fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1)");
  return e;
}
int n_or(const CheckParams& p, int def) { return p.n > 0 ? p.n : def; }
double tau_or(const CheckParams& p, double def) { return std::isfinite(p.tau) ? p.tau : def; }
double xi_or(const CheckParams& p, double def) { return std::isfinite(p.xi) ? p.xi : def; }
int steps_or(int v, int def) { return v > 0 ? v : def; }

ModelParams model(double eps, int n) {
  ModelParams mp;
  mp.eps = eps;
  mp.n = n;
  validate(mp);
  return mp;
}

// Evaluates fn over the items concurrently and stores results by index.
template <class F>
auto ordered_map(std::size_t count, F fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

// Exact Psi_n from the generating series, one series per eps.
double max_error_inside(const SeriesField& sf, const ModelParams& mp, double tau, int steps,
                        cx (*asym)(const ModelParams&, double, double)) {
  double worst = 0.0;
  for (double x : linspace(0.0, 1.0 - tau, steps)) {
    const cx e = sf.psi(mp.n, x, tau / mp.eps).psi;
    worst = std::max(worst, std::abs(asym(mp, x, tau / mp.eps) - e));
  }
  return worst;
}

Table order_table(const std::vector<double>& eps, const std::vector<double>& err) {
  Table t;
  t.columns = {"eps", "err", "order_fit"};
  const double slope = fitted_order(eps, err);
  for (std::size_t i = 0; i < eps.size(); ++i) t.rows.push_back({eps[i], err[i], slope});
  return t;
}

// Uniform sample of C0 away from the cut, with p +- eps/2 also admissible.
cx sample_c0(std::mt19937_64& rng, double eps, double re_span, double im_span) {
  std::uniform_real_distribution<double> re(-re_span, re_span), im(-im_span, im_span);
  for (;;) {
    const cx p(re(rng), im(rng));
    if (std::abs(p.imag()) >= 0.1 || std::abs(p.real()) + 0.5 * eps < 0.9) return p;
  }
}

// L0 by a contour that does not go through the difference-equation shifts:
// the straight line in the central band, else the bent vertical contour.
bool independent_l0(cx p, double eps, cx& out, std::string& how) {
  try {
    out = big_l0(CxPoint(p), eps, L0Method::Direct).value;
    how = "direct";
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ContourClash) throw;
  }
  try {
    out = big_l0(CxPoint(p), eps, L0Method::Bent).value;
    how = "bent";
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ContourClash) throw;
  }
  return false;
}

Table check_difference(const CheckParams& prm) {
  const auto eps_list = eps_or(prm, {0.1, 0.05});
  const int per = steps_or(prm.samples, 25);
  std::mt19937_64 rng(prm.seed);
  struct Job { double eps; cx p; };
  std::vector<Job> jobs;
  for (double eps : eps_list)
    for (int i = 0; i < per; ++i) jobs.push_back({eps, sample_c0(rng, eps, 2.5, 1.5)});
  struct Res { double res, bound; std::string how; };
  // Points whose neighbours only admit the shifted evaluation are redrawn:
  // there the residual holds by construction and tests nothing.
  std::vector<Res> res(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Job& j = jobs[i];
    for (;;) {
      cx up, dn;
      std::string h1, h2;
      if (independent_l0(j.p + 0.5 * j.eps, j.eps, up, h1) &&
          independent_l0(j.p - 0.5 * j.eps, j.eps, dn, h2)) {
        const cx d = l0_prime(CxPoint(j.p));
        res[i] = Res{std::abs(up - dn - j.eps * d), 1e-8 * (1.0 + std::abs(d)),
                     h1 == h2 ? h1 : h1 + "/" + h2};
        break;
      }
      j.p = sample_c0(rng, j.eps, 2.5, 1.5);
    }
  }
  Table t;
  t.columns = {"eps", "re_p", "im_p", "residual", "bound", "contour"};
  for (std::size_t i = 0; i < jobs.size(); ++i)
    t.rows.push_back({jobs[i].eps, jobs[i].p.real(), jobs[i].p.imag(), res[i].res, res[i].bound,
                      res[i].how});
  return t;
}

Table check_r0(const CheckParams& prm) {
  const auto eps_list = eps_or(prm, {0.1, 0.05});
  const int per = steps_or(prm.samples, 20);
  std::mt19937_64 rng(prm.seed + 1);
  std::uniform_real_distribution<double> unit(-0.95, 0.95);
  struct Job { double eps; cx p; double x; };
  std::vector<Job> jobs;
  for (double eps : eps_list)
    for (int i = 0; i < per; ++i) {
      const cx p = sample_c0(rng, eps, 1.5, 0.5);
      jobs.push_back({eps, p, unit(rng)});
    }
  struct Res { double res, mod; };
  auto res = ordered_map(jobs.size(), [&](std::size_t i) {
    const Job& j = jobs[i];
    const cx a = r0(CxPoint(j.p + 0.5 * j.eps), j.eps);
    const cx b = rho0(CxPoint(j.p)) * r0(CxPoint(j.p - 0.5 * j.eps), j.eps);
    return Res{std::abs(a - b) / std::max(1.0, std::abs(a)),
               std::abs(std::abs(r0(CxPoint(j.x), j.eps)) - 1.0)};
  });
  Table t;
  t.columns = {"eps", "re_p", "im_p", "rel_residual", "x", "modulus_error"};
  for (std::size_t i = 0; i < jobs.size(); ++i)
    t.rows.push_back({jobs[i].eps, jobs[i].p.real(), jobs[i].p.imag(), res[i].res, jobs[i].x,
                      res[i].mod});
  return t;
}

Table check_closed_form(const CheckParams&) {
  Table t;
  t.columns = {"quantity", "n", "tau", "value", "expected", "abs_err"};
  const double v = int_l0(CxPoint::above(1.0)).real();
  t.rows.push_back({std::string("int_l0(1)"), 0.0, 0.0, v, kPi - 2.0, std::abs(v - (kPi - 2.0))});
  for (auto [n, tau] : {std::pair{1, -2.0}, {2, -6.0}, {3, -9.0}, {1, 0.5}}) {
    const cx s = action(CxPoint::above(1.0), tau, n).value;
    const double expect = -3.0 + 2.0 * tau_threshold(n) - tau;
    t.rows.push_back({std::string("S(1,tau)"), double(n), tau, s.real(), expect,
                      std::abs(s - expect)});
  }
  return t;
}

Table check_legendre(const CheckParams&) {
  Table t;
  t.columns = {"n", "tau", "residual1", "residual2"};
  for (auto [n, tau] : {std::pair{1, -2.0}, {2, -6.0}}) {
    const LegendreCheck c = legendre_check(n, tau);
    t.rows.push_back({double(n), tau, std::abs(c.lhs1 - c.rhs1), std::abs(c.lhs2 - c.rhs2)});
  }
  return t;
}

Table check_special(const CheckParams&) {
  Table t;
  t.columns = {"function", "arg", "value", "bound"};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int k = 1; k <= 10; ++k) {
    const double tt = -10.0 * k;
    const double v = std::pow(-tt, 1.5) * std::abs(zeta_fn(tt) + 2.0 * std::sqrt(-tt));
    t.rows.push_back({std::string("zeta"), tt, v, nan});
  }
  for (double z : {10.0, 20.0, 50.0, 100.0, -10.0, -20.0, -50.0, -100.0}) {
    const double v = std::abs(2.0 * z * a_fn(z, 0) / kI - 1.0);
    t.rows.push_back({std::string("a"), z, v, 5.0 * std::pow(std::abs(z), -1.5)});
  }
  for (int m = 4; m <= 10; ++m) {
    const cx f = f_transition(std::polar(double(m), kPi / 6.0));
    const double ph = std::fmod(4.0 * m * m * m / 3.0, 2.0 * kPi);
    const double v = std::abs(f / (std::sqrt(double(m)) * std::polar(1.0, -ph)) - 1.0);
    t.rows.push_back({std::string("F"), double(m), v, nan});
  }
  return t;
}

Table check_crossval(const CheckParams& prm) {
  const double eps = eps_or(prm, {0.2}).front();
  const ModelParams mp = model(eps, n_or(prm, 1));
  const double tau = tau_or(prm, -2.0);
  const double t = tau / eps;
  const SeriesField sf(eps);
  std::vector<double> xs = linspace(0.0, 1.0 - tau, steps_or(prm.x_steps, 9));
  for (double dx : {0.25, 0.5, 1.0, 2.0}) xs.push_back(1.0 - tau + dx);
  auto vals = ordered_map(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    const cx c = x <= 1.0 - tau ? psi_n_inside(mp, x, t).psi : psi_n_outside(mp, x, t).psi;
    return std::pair<cx, cx>{c, sf.psi(mp.n, x, t).psi};
  });
  Table tb;
  tb.columns = {"x", "re_contour", "im_contour", "re_series", "im_series", "abs_diff"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto [c, s] = vals[i];
    tb.rows.push_back({xs[i], c.real(), c.imag(), s.real(), s.imag(), std::abs(c - s)});
  }
  return tb;
}

Table check_interface(const CheckParams& prm) {
  const double eps = eps_or(prm, {0.2}).front();
  const int n = n_or(prm, 1);
  const SeriesField sf(eps);
  std::vector<double> taus = std::isfinite(prm.tau) ? std::vector<double>{prm.tau}
                                                    : std::vector<double>{-2.0, -1.5, -1.0};
  using S = SeriesField::Side;
  Table tb;
  tb.columns = {"eps", "tau", "value_jump", "derivative_jump"};
  const double h = 1e-4;
  for (double tau : taus) {
    const double t = tau / eps, xe = 1.0 - tau;
    auto val = [&](double x, S side) { return sf.psi(n, x, t, side).psi; };
    auto der = [&](S side) { return (val(xe + h, side) - val(xe - h, side)) / (2.0 * h); };
    tb.rows.push_back({eps, tau, std::abs(val(xe, S::Inside) - val(xe, S::Outside)),
                       std::abs(der(S::Inside) - der(S::Outside))});
  }
  return tb;
}

Table check_oracle(const CheckParams& prm) {
  const double eps = eps_or(prm, {0.2}).front();
  const ModelParams mp = model(eps, n_or(prm, 1));
  const double tau0 = tau_or(prm, -2.0);
  Table tb;
  tb.columns = {"nx", "dt", "deviation", "norm_drift", "runtime_ms"};
  for (int r = 0; r < 2; ++r) {
    GridSpec g;
    g.x_max = 40.0;
    g.nx = 2000 << r;
    g.dt = 0.02 / (1 << r);
    const OracleReport rep = propagate_and_compare(mp, tau0 / eps, (tau0 + 0.5) / eps, g);
    tb.rows.push_back({double(g.nx), g.dt, rep.deviation, rep.norm_drift, rep.runtime_ms});
  }
  return tb;
}

Table check_adiabatic(const CheckParams& prm) {
  const auto eps_list = eps_or(prm, {0.1, 0.05, 0.025});
  const int n = n_or(prm, 1);
  const double tau = tau_or(prm, -2.0);
  const int steps = steps_or(prm.x_steps, 9);
  auto err = ordered_map(eps_list.size(), [&](std::size_t i) {
    const SeriesField sf(eps_list[i]);
    return max_error_inside(sf, model(eps_list[i], n), tau, steps, &adiabatic_leading);
  });
  return order_table(eps_list, err);
}

Table check_exterior(const CheckParams& prm) {
  const auto eps_list = eps_or(prm, {0.1, 0.05, 0.025});
  const int n = n_or(prm, 1);
  const double tau = tau_or(prm, -2.0);
  const double xi = xi_or(prm, 0.5);
  auto err = ordered_map(eps_list.size(), [&](std::size_t i) {
    const double eps = eps_list[i];
    const SeriesField sf(eps);
    const double x = 1.0 - tau + xi / eps;
    const cx e = sf.psi(n, x, tau / eps).psi;
    return std::abs(outside_leading(model(eps, n), x, tau / eps) - e) / std::abs(e);
  });
  return order_table(eps_list, err);
}

Table check_transition(const CheckParams& prm) {
  const auto eps_list = eps_or(prm, {0.1, 0.05});
  const int n = n_or(prm, 1);
  const int steps = steps_or(prm.x_steps, 9);
  const double tn = tau_threshold(n);
  Table tb;
  tb.columns = {"eps", "tau", "z", "err", "c"};
  for (double eps : eps_list) {
    const SeriesField sf(eps);
    const ModelParams mp = model(eps, n);
    for (double tau : {tn, tn - std::cbrt(eps), tn - 0.2}) {
      const double z = big_z(mp, tau);
      const double err = max_error_inside(sf, mp, tau, steps, &transition_leading);
      tb.rows.push_back({eps, tau, z, err, err / (std::pow(eps, 2.0 / 3.0) * (1.0 + std::sqrt(z)))});
    }
  }
  return tb;
}

Table check_aftermath(const CheckParams& prm) {
  const auto eps_list = eps_or(prm, {0.1, 0.05});
  const int n = n_or(prm, 1);
  const double tn = tau_threshold(n);
  Table tb;
  tb.columns = {"eps", "err", "c"};
  for (double eps : eps_list) {
    const SeriesField sf(eps);
    const ModelParams mp = model(eps, n);
    std::vector<std::pair<double, double>> pts;
    for (int j = 0; j <= 10; ++j) {
      const double tau = tn + 0.1 * j;
      if (tau > 1.0) break;
      for (double x : {0.3, 0.8 * (1.0 - tau)}) pts.push_back({tau, x});
    }
    auto r = ordered_map(pts.size(), [&](std::size_t i) {
      const auto [tau, x] = pts[i];
      const double t = tau / eps;
      const double err = std::abs(aftermath_sum(mp, x, t) - sf.psi(n, x, t).psi);
      const double z = (tn - tau) / std::cbrt(4.0 * eps);
      const double bound = std::pow(eps, 7.0 / 6.0) + std::pow(eps, 2.0 / 3.0) / std::pow(1.0 + std::abs(z), 2.5);
      return std::pair<double, double>{err, err / bound};
    });
    double emax = 0.0, cmax = 0.0;
    for (auto [e, c] : r) {
      emax = std::max(emax, e);
      cmax = std::max(cmax, c);
    }
    tb.rows.push_back({eps, emax, cmax});
  }
  return tb;
}

Table check_resonance(const CheckParams& prm) {
  const double eps = eps_or(prm, {0.05}).front();
  const int n = n_or(prm, 3);
  const double x = 0.3;
  const ModelParams mp = model(eps, n);
  const SeriesField sf(eps);
  std::vector<double> taus;
  for (double tau = tau_threshold(n); tau <= 1.0 - x; tau += 0.05) taus.push_back(tau);
  auto r = ordered_map(taus.size(), [&](std::size_t i) {
    const double t = taus[i] / eps;
    return std::pair<double, double>{std::abs(sf.psi(n, x, t).psi), std::abs(aftermath_sum(mp, x, t))};
  });
  Table tb;
  tb.columns = {"tau", "abs_psi", "abs_asym"};
  for (std::size_t i = 0; i < taus.size(); ++i) tb.rows.push_back({taus[i], r[i].first, r[i].second});
  return tb;
}

Table check_decay(const CheckParams& prm) {
  const double eps = eps_or(prm, {0.1}).front();
  const int n = n_or(prm, 1);
  const double tau = tau_or(prm, -2.0);
  const SeriesField sf(eps);
  const std::vector<double> xis = linspace(1.0, 3.0, steps_or(prm.x_steps, 9));
  std::vector<double> mags;
  for (double xi : xis) mags.push_back(std::abs(sf.psi(n, 1.0 - tau + xi / eps, tau / eps).psi));
  // ln|Psi| = a - c xi / eps, least squares in xi.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(xis.size());
  for (std::size_t i = 0; i < xis.size(); ++i) {
    const double y = std::log(mags[i]);
    sx += xis[i];
    sy += y;
    sxx += xis[i] * xis[i];
    sxy += xis[i] * y;
  }
  const double c = -eps * (m * sxy - sx * sy) / (m * sxx - sx * sx);
  Table tb;
  tb.columns = {"xi", "abs_psi", "c_fit"};
  for (std::size_t i = 0; i < xis.size(); ++i) tb.rows.push_back({xis[i], mags[i], c});
  return tb;
}

struct Entry {
  const char* name;
  Table (*fn)(const CheckParams&);
};
const Entry kChecks[] = {
    {"difference", check_difference}, {"r0", check_r0},
    {"closed-form", check_closed_form}, {"legendre", check_legendre},
    {"special-asymptotics", check_special}, {"crossval", check_crossval},
    {"interface", check_interface}, {"oracle", check_oracle},
    {"adiabatic", check_adiabatic}, {"transition", check_transition},
    {"aftermath", check_aftermath}, {"resonance", check_resonance},
    {"decay", check_decay}, {"exterior", check_exterior},
};

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kChecks) v.push_back(e.name);
    return v;
  }();
  return names;
}

Table run_check(const std::string& name, const CheckParams& params) {
  for (const Entry& e : kChecks)
    if (name == e.name) return e.fn(params);
  fail(ErrorCode::InvalidArgument, "unknown check " + name);
}

Table field_table(const ModelParams& mp, double t, double x_min, double x_max, int steps,
                  FieldMethod method) {
  validate(mp);
  const double tau = mp.eps * t;
  if (tau > 1.0) fail(ErrorCode::InvalidArgument, "eps * t must not exceed 1");
  if (!(x_min >= 0.0) || !(x_max >= x_min)) fail(ErrorCode::InvalidArgument, "need 0 <= x_min <= x_max");
  const std::vector<double> xs = linspace(x_min, x_max, steps);
  std::vector<FieldSample> out;
  if (method == FieldMethod::SeriesAnsatz) {
    const SeriesField sf(mp.eps);
    out = ordered_map(xs.size(), [&](std::size_t i) { return sf.psi(mp.n, xs[i], t); });
  } else if (method == FieldMethod::ContourQuadrature) {
    const double edge = 1.0 - tau;
    std::unique_ptr<ContourField> inner;
    if (x_min <= edge)
      inner = std::make_unique<ContourField>(mp, tau, default_contour(mp, tau), std::min(x_max, edge));
    out = ordered_map(xs.size(), [&](std::size_t i) {
      FieldSample s = xs[i] <= edge ? inner->inside(xs[i]) : psi_n_outside(mp, xs[i], t);
      s.point = {xs[i], t};
      return s;
    });
  } else {
    fail(ErrorCode::InvalidArgument, "field supports the contour and series methods");
  }
  Table tb;
  tb.columns = {"x", "tau", "re_psi", "im_psi", "est_error"};
  for (std::size_t i = 0; i < xs.size(); ++i)
    tb.rows.push_back({xs[i], tau, out[i].psi.real(), out[i].psi.imag(), out[i].est_error});
  return tb;
}

Table compare_table(const ModelParams& mp, double t, int steps, double delta_reg) {
  validate(mp);
  const double tau = mp.eps * t;
  if (tau > 1.0) fail(ErrorCode::InvalidArgument, "eps * t must not exceed 1");
  const SeriesField sf(mp.eps);
  const std::vector<double> xs = linspace(0.0, 1.0 - tau, steps);
  struct Row { cx exact, asym; Regime regime; };
  auto rows = ordered_map(xs.size(), [&](std::size_t i) {
    const auto [a, r] = best_leading(mp, xs[i], t, delta_reg);
    return Row{sf.psi(mp.n, xs[i], t).psi, a, r};
  });
  Table tb;
  tb.columns = {"x", "re_exact", "im_exact", "re_asym", "im_asym", "abs_err", "regime"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Row& r = rows[i];
    tb.rows.push_back({xs[i], r.exact.real(), r.exact.imag(), r.asym.real(), r.asym.imag(),
                       std::abs(r.exact - r.asym), std::string(regime_name(r.regime))});
  }
  return tb;
}

}  // namespace adia
