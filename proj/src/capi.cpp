#include "adia/adia.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <functional>
#include <limits>
#include <string>

#include "adia/branchfns.hpp"
#include "adia/runs.hpp"
#include "adia/specialfns.hpp"
#include "adia/symbolfield.hpp"

struct adia_table {
  adia::Table table;
};

struct adia_series {
  adia::SeriesField field;
};

namespace {

thread_local std::string g_last_error;

adia_status guard(const std::function<void()>& body) {
  try {
    body();
    g_last_error.clear();
    return ADIA_OK;
  } catch (const adia::Error& e) {
    g_last_error = e.what();
    return static_cast<adia_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
    return ADIA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "internal: unknown exception";
    return ADIA_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) adia::fail(adia::ErrorCode::InvalidArgument, what);
}

adia::cx to_cx(adia_complex z) { return {z.re, z.im}; }
adia_complex from_cx(adia::cx z) { return {z.real(), z.imag()}; }

adia::Limit parse_side(const char* side) {
  if (side == nullptr || std::strcmp(side, "none") == 0) return adia::Limit::None;
  if (std::strcmp(side, "above") == 0) return adia::Limit::PlusI0;
  if (std::strcmp(side, "below") == 0) return adia::Limit::MinusI0;
  adia::fail(adia::ErrorCode::InvalidArgument, "side must be none, above or below");
}

double real_arg(adia::cx z) {
  require(z.imag() == 0.0, "this function takes a real argument");
  return z.real();
}

struct SpecialFn {
  const char* name;
  std::function<adia::cx(adia::cx, double, adia::Limit)> fn;
};

const std::vector<SpecialFn>& specials() {
  using adia::cx;
  using adia::CxPoint;
  using adia::Limit;
  using adia::Sheet;
  static const std::vector<SpecialFn> table = {
      {"q0", [](cx z, double, Limit l) { return adia::q0(CxPoint(z, Sheet::C0, l)); }},
      {"l0", [](cx z, double, Limit l) { return adia::l0(CxPoint(z, Sheet::C0, l)); }},
      {"l0_prime", [](cx z, double, Limit l) { return adia::l0_prime(CxPoint(z, Sheet::C0, l)); }},
      {"l1", [](cx z, double, Limit l) { return adia::l1(CxPoint(z, Sheet::C1, l)); }},
      {"int_l0", [](cx z, double, Limit l) { return adia::int_l0(CxPoint(z, Sheet::C0, l)); }},
      {"rho0", [](cx z, double, Limit l) { return adia::rho0(CxPoint(z, Sheet::C0, l)); }},
      {"airy", [](cx z, double, Limit) { return adia::airy_ai(z, 0); }},
      {"airy_prime", [](cx z, double, Limit) { return adia::airy_ai(z, 1); }},
      {"F", [](cx z, double, Limit) { return adia::f_transition(z); }},
      {"a", [](cx z, double, Limit) { return adia::a_fn(real_arg(z), 0); }},
      {"a_prime", [](cx z, double, Limit) { return adia::a_fn(real_arg(z), 1); }},
      {"a_second", [](cx z, double, Limit) { return adia::a_fn(real_arg(z), 2); }},
      {"zeta", [](cx z, double, Limit) { return adia::zeta_fn(z); }},
      {"L0", [](cx z, double e, Limit l) { return adia::big_l0(CxPoint(z, Sheet::C0, l), e).value; }},
      {"L1", [](cx z, double e, Limit l) { return adia::big_l1(CxPoint(z, Sheet::C1, l), e).value; }},
      {"P", [](cx z, double e, Limit) { return adia::periodic_p(z, e); }},
      {"R0", [](cx z, double e, Limit l) { return adia::r0(CxPoint(z, Sheet::C0, l), e); }},
      {"A", [](cx z, double e, Limit l) { return adia::amplitude_a(CxPoint(z, Sheet::C0, l), e); }},
      {"R", [](cx z, double e, Limit) { return adia::r_boundary(real_arg(z), e); }},
  };
  return table;
}

adia_table* wrap(adia::Table t) { return new adia_table{std::move(t)}; }

}  // namespace

extern "C" {

const char* adia_version(void) { return "1.0.0"; }

const char* adia_status_name(adia_status status) {
  if (status == ADIA_OK) return "Ok";
  if (status == ADIA_ERR_INTERNAL) return "Internal";
  if (status >= ADIA_ERR_INVALID_ARGUMENT && status <= ADIA_ERR_LINEAR_SOLVE_FAILURE)
    return adia::error_name(static_cast<adia::ErrorCode>(status));
  return "Unknown";
}

int adia_status_is_validation(adia_status status) {
  switch (status) {
    case ADIA_ERR_INVALID_ARGUMENT:
    case ADIA_ERR_BRANCH_VIOLATION:
    case ADIA_ERR_POLE_AT:
    case ADIA_ERR_NO_EIGENVALUE:
    case ADIA_ERR_ON_CUT:
      return 1;
    default:
      return 0;
  }
}

const char* adia_last_error(void) { return g_last_error.c_str(); }

const char* adia_special_name(size_t index) {
  return index < specials().size() ? specials()[index].name : nullptr;
}

adia_status adia_special(const char* fn, adia_complex arg, double eps, const char* side,
                         adia_complex* out) {
  return guard([&] {
    require(fn != nullptr && out != nullptr, "null argument");
    require(std::isfinite(arg.re) && std::isfinite(arg.im), "argument must be finite");
    const adia::Limit lim = parse_side(side);
    for (const SpecialFn& s : specials())
      if (std::strcmp(s.name, fn) == 0) {
        *out = from_cx(s.fn(to_cx(arg), eps, lim));
        return;
      }
    adia::fail(adia::ErrorCode::InvalidArgument, std::string("unknown function ") + fn);
  });
}

adia_status adia_tau_threshold(int n, double* out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    require(n >= 1, "n must be >= 1");
    *out = adia::tau_threshold(n);
  });
}

adia_status adia_eigen(int n, double tau, double* p_n, double* e_n, double* dlnpn_dtau) {
  return guard([&] {
    require(p_n && e_n && dlnpn_dtau, "null argument");
    require(n >= 1, "n must be >= 1");
    require(std::isfinite(tau), "tau must be finite");
    *p_n = adia::p_n(n, tau);
    *e_n = adia::e_n(n, tau);
    *dlnpn_dtau = adia::dlnpn_dtau(n, tau);
  });
}

adia_status adia_series_create(double eps, adia_series** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
    *out = new adia_series{adia::SeriesField(eps)};
  });
}

adia_status adia_series_psi(const adia_series* s, int n, double x, double t, adia_complex* psi,
                            double* est_error) {
  return guard([&] {
    require(s != nullptr && psi != nullptr, "null argument");
    const adia::FieldSample f = s->field.psi(n, x, t);
    *psi = from_cx(f.psi);
    if (est_error) *est_error = f.est_error;
  });
}

void adia_series_free(adia_series* s) { delete s; }

adia_status adia_field_table(double eps, int n, double t, double x_min, double x_max, int steps,
                             const char* method, adia_table** out) {
  return guard([&] {
    require(out != nullptr && method != nullptr, "null argument");
    adia::FieldMethod m;
    if (std::strcmp(method, "contour") == 0) m = adia::FieldMethod::ContourQuadrature;
    else if (std::strcmp(method, "series") == 0) m = adia::FieldMethod::SeriesAnsatz;
    else adia::fail(adia::ErrorCode::InvalidArgument, "method must be contour or series");
    adia::ModelParams mp;
    mp.eps = eps;
    mp.n = n;
    *out = wrap(adia::field_table(mp, t, x_min, x_max, steps, m));
  });
}

adia_status adia_compare_table(double eps, int n, double t, int steps, double delta_reg,
                               adia_table** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    adia::ModelParams mp;
    mp.eps = eps;
    mp.n = n;
    *out = wrap(adia::compare_table(mp, t, steps, delta_reg));
  });
}

void adia_check_params_init(adia_check_params* p) {
  if (!p) return;
  const adia::CheckParams d;
  p->eps = nullptr;
  p->eps_count = 0;
  p->n = 0;
  p->tau = std::numeric_limits<double>::quiet_NaN();
  p->xi = std::numeric_limits<double>::quiet_NaN();
  p->x_steps = 0;
  p->samples = 0;
  p->seed = d.seed;
}

const char* adia_check_name(size_t index) {
  const auto& names = adia::check_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

adia_status adia_check(const char* name, const adia_check_params* p, adia_table** out) {
  return guard([&] {
    require(name != nullptr && p != nullptr && out != nullptr, "null argument");
    adia::CheckParams cp;
    if (p->eps && p->eps_count) cp.eps.assign(p->eps, p->eps + p->eps_count);
    cp.n = p->n;
    cp.tau = p->tau;
    cp.xi = p->xi;
    cp.x_steps = p->x_steps;
    cp.samples = p->samples;
    cp.seed = p->seed;
    *out = wrap(adia::run_check(name, cp));
  });
}

adia_status adia_oracle(double eps, int n, double t0, double t1, double x_max, int nx, double dt,
                        const char* snap, adia_oracle_report* out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    adia::GridSpec g;
    g.x_max = x_max;
    g.nx = nx;
    g.dt = dt;
    if (snap == nullptr || std::strcmp(snap, "cell-average") == 0) g.snap = adia::SnapPolicy::CellAverage;
    else if (std::strcmp(snap, "nearest-node") == 0) g.snap = adia::SnapPolicy::NearestNode;
    else adia::fail(adia::ErrorCode::InvalidArgument, "snap must be cell-average or nearest-node");
    adia::ModelParams mp;
    mp.eps = eps;
    mp.n = n;
    const adia::OracleReport r = adia::propagate_and_compare(mp, t0, t1, g);
    *out = {r.deviation, r.norm_drift, r.runtime_ms, r.boundary_amplitude, r.steps};
  });
}

size_t adia_table_rows(const adia_table* t) { return t ? t->table.rows.size() : 0; }
size_t adia_table_cols(const adia_table* t) { return t ? t->table.columns.size() : 0; }

const char* adia_table_column(const adia_table* t, size_t col) {
  if (!t || col >= t->table.columns.size()) return nullptr;
  return t->table.columns[col].c_str();
}

const char* adia_table_text(const adia_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.rows[row].size()) return nullptr;
  const auto* s = std::get_if<std::string>(&t->table.rows[row][col]);
  return s ? s->c_str() : nullptr;
}

double adia_table_number(const adia_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.rows[row].size())
    return std::numeric_limits<double>::quiet_NaN();
  const auto* v = std::get_if<double>(&t->table.rows[row][col]);
  return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

void adia_table_free(adia_table* t) { delete t; }

}  // extern "C"
