#pragma once

#include "adia/types.hpp"

namespace adia {

// Throws BranchViolation when p lies on the cut of its sheet without a limit
// tag, or carries a limit tag while not on the real axis.
void check_point(const CxPoint& p);

// Branch of sqrt(p^2 - 1) on C0 with Q0(0) = i.
cx q0(const CxPoint& p);
// -i ln rho0(p) with l0(0) = 0; equals 2 asin(p) on [-1, 1].
cx l0(const CxPoint& p);
// d l0 / dp = 2i / Q0(p); singular at p = +-1.
cx l0_prime(const CxPoint& p);
// Continuation of l0 from the upper half plane onto C1.
cx l1(const CxPoint& p);
cx l1_prime(const CxPoint& p);
// Closed form of the integral of l0 from 0 to p inside C0.
cx int_l0(const CxPoint& p);
// (Q0 - p) / (Q0 + p), evaluated as -(Q0 - p)^2.
cx rho0(const CxPoint& p);

// Untagged conveniences for points strictly inside the cut plane.
inline cx l0(cx p) { return l0(CxPoint(p)); }
inline cx q0(cx p) { return q0(CxPoint(p)); }
inline cx l0_prime(cx p) { return l0_prime(CxPoint(p)); }
inline cx int_l0(cx p) { return int_l0(CxPoint(p)); }

// Q0 on the real line with the limit side chosen by the sign of x, i.e.
// Q0(x + i0 sgn x). This is the branch the generating series uses.
cx q_real(double x);
inline cx rho_real(double x) {
  const cx q = q_real(x);
  return -(q - x) * (q - x);
}

}  // namespace adia
