#pragma once

#include <optional>
#include <vector>

#include "adia/spectrum.hpp"
#include "adia/types.hpp"

namespace adia {

enum class SnapPolicy { CellAverage, NearestNode };
const char* snap_name(SnapPolicy s);

// Uniform grid x_i = i x_max / nx, i = 0..nx, Dirichlet at both ends.
struct GridSpec {
  double x_max = 40.0;
  int nx = 8000;
  double dt = 0.005;
  SnapPolicy snap = SnapPolicy::CellAverage;
  double dx() const { return x_max / nx; }
};
void validate(const GridSpec& g);

struct WaveVector {
  std::vector<cx> values;  // nx + 1 entries, ends pinned to zero
  double time = 0.0;
};

// Node potential for the well [0, 1 - tau] of depth 1.
std::vector<double> node_potential(const GridSpec& g, double tau);

// Crank-Nicolson propagator for i psi_t = -psi_xx + v(x, eps t) psi.
class CrankNicolson {
 public:
  // frozen_tau pins the potential at a fixed tau instead of eps t.
  CrankNicolson(const GridSpec& g, double eps, std::optional<double> frozen_tau = std::nullopt);
  // One step of size g.dt with the potential at the midpoint time.
  WaveVector step(const WaveVector& s) const { return step(s, grid_.dt); }
  WaveVector step(const WaveVector& s, double dt) const;
  // Advances in equal steps no longer than g.dt to exactly t_end.
  WaveVector propagate(WaveVector s, double t_end, long* steps_taken = nullptr) const;

 private:
  GridSpec grid_;
  double eps_;
  std::optional<double> frozen_tau_;
};

double l2_norm(const WaveVector& s, double dx);

struct OracleReport {
  double deviation = 0.0;           // relative L2 distance at t1
  double norm_drift = 0.0;          // | ||psi(t1)|| / ||psi(t0)|| - 1 |
  double runtime_ms = 0.0;
  double boundary_amplitude = 0.0;  // max |psi| over the last 5% of the grid at t1
  long steps = 0;
};

// Samples the exact Psi_n at t0 and t1 from the generating series, propagates
// the t0 samples with Crank-Nicolson and compares.
OracleReport propagate_and_compare(const ModelParams& mp, double t0, double t1,
                                   const GridSpec& g);

// Exact Psi_n sampled on the grid at time t, zero at the Dirichlet ends.
WaveVector sample_exact(const ModelParams& mp, double t, const GridSpec& g);

}  // namespace adia
