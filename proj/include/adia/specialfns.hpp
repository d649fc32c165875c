#pragma once

#include "adia/types.hpp"

namespace adia {

struct SeriesControl {
  int truncation_order = 120;   // Maclaurin terms
  double switch_radius = 8.0;   // |s| where the asymptotic expansion takes over
  double target_abs_tol = 1e-12;
};

void validate(const SeriesControl& ctl);

// Ai(s) (derivative = 0) or Ai'(s) (derivative = 1) for |s| <= 1000.
cx airy_ai(cx s, int derivative, const SeriesControl& ctl = {});

// F(z) = sqrt(pi) exp(-2 z^3 / 3 - i pi / 12) (z Ai(z^2) - Ai'(z^2)).
// For large |z| the exponentials are combined analytically to avoid overflow
// and cancellation.
cx f_transition(cx z, const SeriesControl& ctl = {});

// a(z) = int_0^inf exp(-u^3/3 + i z u^2) u du and its z-derivatives up to 2.
cx a_fn(double z, int derivative);

// Regularized sum  lim_L (sum_{l<L} (l + 1/2 - t)^{-1/2} - 2 sqrt(L)).
cx zeta_fn(cx t);

// f0 = -sum_{k>=1} (-1)^k k^{-3/2} (an alternating Dirichlet eta value).
double f0_constant();

}  // namespace adia
