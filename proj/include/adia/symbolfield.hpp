#pragma once

#include <vector>

#include "adia/quadrature.hpp"
#include "adia/types.hpp"

namespace adia {

enum class ContourKind { VerticalLine, BentVertical, Ray, SteepestDescent, Polyline };

// Integration path in the complex p-plane. For polylines `nodes` lists the
// vertices in integration order.
struct ContourSpec {
  ContourKind kind = ContourKind::VerticalLine;
  CxPoint anchor;
  std::vector<cx> nodes;
  double truncation_height = 12.0;  // in units of eps for kernel contours
  double clearance = 0.0;
};

enum class L0Method {
  Auto,    // straight line in the central band, difference-equation shifts outside
  Direct,  // straight vertical line only; ContourClash outside the central band
  Bent     // adaptive quadrature along the bent vertical curve
};

// Vertical contour through p that clears the cut of C0 by at least eps/4.
// Throws ContourClash when no such contour exists.
ContourSpec bent_contour(const CxPoint& p, double eps);

// Cosecant-kernel solution of L(p + eps/2) - L(p - eps/2) = eps l0'(p).
QuadratureReport big_l0(const CxPoint& p, double eps, L0Method method = L0Method::Auto);
// L0(p) - l0(p), evaluated with the l0 part subtracted inside the kernel.
cx big_l0_minus_l0(cx p, double eps);
// Same kernel with the contour kept inside C1.
QuadratureReport big_l1(const CxPoint& p, double eps);

// P = L0 - L1 for Im p > 0, and its Fourier coefficients P_1..P_kmax.
cx periodic_p(cx p, double eps);
std::vector<cx> periodic_p_fourier(double eps, int k_max);

// Integral of L0 from 0 to p inside C0 (boundary tags allowed for |Re p| > 1).
cx action_integral(const CxPoint& p, double eps);
// Integral of L0 - l0 from 0 to p (interior points only).
cx action_integral_minus_l0(const CxPoint& p, double eps);
cx r0(const CxPoint& p, double eps);
cx amplitude_a(const CxPoint& p, double eps);

// R on the real line: base values on (-eps/2, eps/2] times rho products.
cx r_boundary(double p, double eps);

// R at p_base + eps l for l = -l_max..l_max; index l + l_max.
struct RLine {
  double p_base = 0.0;
  int l_max = 0;
  std::vector<cx> values;
  cx at(int l) const { return values[static_cast<std::size_t>(l + l_max)]; }
};
RLine r_line(double p_base, double eps, int l_max);
int default_l_max(double eps);

}  // namespace adia
