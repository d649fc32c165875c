#pragma once

#include "adia/types.hpp"

namespace adia {

struct ModelParams {
  double eps = 0.1;
  int n = 1;
  double tol = 1e-12;
};

// Throws InvalidArgument unless 0 < eps < 1, n >= 1, tol > 0.
void validate(const ModelParams& mp);

struct SpaceTimePoint {
  double x = 0.0;
  double t = 0.0;
  double tau(double eps) const { return eps * t; }
  double xi(double eps) const { return eps * (x - (1.0 - eps * t)); }
};

// Threshold at which the n-th bound state disappears.
double tau_threshold(int n);

// Root in (0, 1) of (1 - tau) p + asin p = pi n, by bisection.
double p_n(int n, double tau, double tol = 1e-15);
double e_n(int n, double tau);
double dlnpn_dtau(int n, double tau);

// Instantaneous eigenfunction, continuous at the well edge x = 1 - tau.
double psi_n(int n, double tau, double x);

// Unit-modulus phase exp(i (2 tau_n - 3) / eps + i pi / 4).
cx c_n_phase(const ModelParams& mp);

// Integral of E_n from tau_n to tau (tau <= tau_n), adaptive Gauss-Kronrod.
double int_e_n(int n, double tau);

// Root of (1 - tau) p + asin p - i p xi / (2 sqrt(1 - p^2)) = pi n continued
// from the real eigen-momentum; Re sqrt(1 - p^2) > 0 throughout.
cx p_n_tilde(int n, double tau, double xi);
// d ln p_tilde / d tau at fixed xi.
cx dlnptilde_dtau(int n, double tau, double xi, cx p_tilde);
// Residual of the defining equation of p_tilde.
cx p_tilde_residual(int n, double tau, double xi, cx p);

}  // namespace adia
