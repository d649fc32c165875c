#pragma once

#include <vector>

#include "adia/spectrum.hpp"
#include "adia/symbolfield.hpp"
#include "adia/types.hpp"

namespace adia {

struct ActionEval {
  cx value;  // S
  cx dp;     // S_p
  cx dpp;    // S_pp
};

// S(p, tau) = p^2 (1 - tau) - 2 pi n p + int_0^p l0, with closed-form pieces.
// S_pp is reported as +infinity at the branch points p = +-1.
ActionEval action(const CxPoint& p, double tau, int n);
// S + Q0(p) xi.
ActionEval action_tilde(const CxPoint& p, double tau, int n, double xi);

struct LegendreCheck {
  double lhs1, rhs1;  // tau + S(p_n, tau)  vs  int_tau^{tau_n} E_n + 2 tau_n - 3
  double lhs2, rhs2;  // 1 / S_pp(p_n, tau) vs  (1/2) d ln p_n / d tau
};
LegendreCheck legendre_check(int n, double tau);

enum class FieldMethod { ContourQuadrature, SeriesAnsatz, Oracle };
const char* method_name(FieldMethod m);

struct FieldSample {
  SpaceTimePoint point;
  cx psi;
  FieldMethod method = FieldMethod::ContourQuadrature;
  double est_error = 0.0;
};

// Ray through `anchor` with direction e^{i theta}, integrated from -inf to +inf.
ContourSpec ray_contour(cx anchor, double theta, double reach = 60.0);
// Steepest-descent ray through the real or complex saddle.
ContourSpec saddle_ray_contour(int n, double tau, double xi = 0.0);
// Polyline hugging the upper side of the cut; used near and past tau_n.
ContourSpec hugging_contour(const ModelParams& mp, double tau);
// Saddle ray when the saddle sits well inside (-1, 1), hugging otherwise.
ContourSpec default_contour(const ModelParams& mp, double tau);
// Traced steepest-descent polyline through the saddle, both arms.
ContourSpec trace_steepest(int n, double tau, double xi, double eps = 0.1);

// Contour quadrature nodes for one (eps, n, tau), reusable across x.
class ContourField {
 public:
  // x_max bounds the sin(p x) growth used by the truncation test. For the
  // exterior representation pass outside = true and the xi the contour is
  // tuned for; evaluation is valid for any xi >= 0.
  ContourField(const ModelParams& mp, double tau, const ContourSpec& contour,
               double x_max, bool outside = false);
  FieldSample inside(double x) const;
  FieldSample outside(double x) const;
  std::size_t node_count() const { return p_.size(); }

 private:
  ModelParams mp_;
  double tau_;
  bool outside_;
  std::vector<cx> p_, g_;  // nodes and weight * amplitude * phase
  double tail_ = 0.0;
};

FieldSample psi_n_inside(const ModelParams& mp, double x, double t);
FieldSample psi_n_inside(const ModelParams& mp, double x, double t, const ContourSpec& c);
FieldSample psi_n_outside(const ModelParams& mp, double x, double t);

// The generating solution Psi(x, t, p) by direct summation.
cx generating_series(double eps, double x, double t, double p, int l_max = 0);

// Fourier coefficients of the generating solution in p, with R tables cached
// per quadrature node. Thread-safe for concurrent evaluation after construction.
class SeriesField {
 public:
  explicit SeriesField(double eps, int nodes_per_piece = 48);
  enum class Side { Auto, Inside, Outside };
  // Auto picks the representation by x <= 1 - eps t; the others evaluate the
  // chosen one regardless, as used by interface continuity checks.
  FieldSample psi(int n, double x, double t, Side side = Side::Auto) const;
  double eps() const { return eps_; }

 private:
  double eps_;
  std::vector<double> k_;   // k = p_base + eps l for every node and l
  std::vector<cx> c_;       // quadrature weight * R(k)
  std::vector<double> p_;   // quadrature node p of each entry
  std::vector<cx> q_, p1_, tr_;  // exterior data per entry
};

}  // namespace adia
