#pragma once

#include <functional>
#include <vector>

#include "adia/types.hpp"

namespace adia {

struct QuadratureReport {
  cx value{0.0, 0.0};
  double est_error = 0.0;
  long nodes_used = 0;
};

// Gauss-Legendre rule on [-1, 1]. Supported orders: 8, 16, 24, 32, 48, 64.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussRule& gauss_rule(int order);

// Spectral integration on one Gauss-Legendre panel: row i maps nodal values
// f(x_j) to the integral of their interpolant over [-1, x_i].
const std::vector<std::vector<double>>& gauss_cumulative_matrix(int order);

using CxFn = std::function<cx(double)>;

struct AdaptiveOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_intervals = 4000;
};

// Globally adaptive 7/15 Gauss-Kronrod on [a, b] with optional interior
// breakpoints. Throws QuadratureFailure when the tolerance is not met.
QuadratureReport integrate_adaptive(const CxFn& f, double a, double b,
                                    const AdaptiveOptions& opt = {},
                                    const std::vector<double>& breaks = {});

// Same, but returns the best estimate instead of throwing.
QuadratureReport integrate_adaptive_nothrow(const CxFn& f, double a, double b,
                                            const AdaptiveOptions& opt = {},
                                            const std::vector<double>& breaks = {});

}  // namespace adia
