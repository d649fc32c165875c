#pragma once

#include <utility>

#include "adia/spectrum.hpp"
#include "adia/types.hpp"

namespace adia {

enum class Regime { Adiabatic, Transition, Aftermath };
const char* regime_name(Regime r);

struct AftermathTerms {
  cx t0, r0, g0;
  double z_scaled = 0.0;  // (tau_n - tau) / (4 eps)^{1/3}
};

// Leading term below threshold inside the well.
cx adiabatic_leading(const ModelParams& mp, double x, double t);
// Leading term outside the well below threshold.
cx outside_leading(const ModelParams& mp, double x, double t);
// Uniform leading term for tau_n - delta <= tau <= tau_n.
cx transition_leading(const ModelParams& mp, double x, double t);
// Z_n = (3 / (4 eps) int_{tau_n}^{tau} E_n)^{1/3} >= 0.
double big_z(const ModelParams& mp, double tau);

AftermathTerms aftermath_terms(const ModelParams& mp, double x, double t);
cx aftermath_sum(const ModelParams& mp, double x, double t);

// Width of the transition window; delta_reg <= 0 selects 5 eps^{1/3}.
double default_delta_reg(double eps);
Regime classify_regime(const ModelParams& mp, double t, double delta_reg = 0.0);
std::pair<cx, Regime> best_leading(const ModelParams& mp, double x, double t,
                                   double delta_reg = 0.0);

// Large-|z| expansion of a(z) and its derivatives, used for |z| >= 15.
cx a_fn_asymptotic(double z, int derivative);
// a(z) dispatching between quadrature and the expansion above.
cx a_fn_fast(double z, int derivative);

// Re int_0^inf e^{-2 s d} (e^{i pi/4} zeta(i s) + 2 sqrt(s)) ds for d > 0.
double g0_integral(double d);

}  // namespace adia
