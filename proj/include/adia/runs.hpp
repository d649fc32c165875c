#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "adia/oracle.hpp"
#include "adia/spectrum.hpp"
#include "adia/wavefield.hpp"

namespace adia {

using Cell = std::variant<double, std::string>;

// Column-labelled result table produced by the batch runs below.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  double number(std::size_t row, const std::string& column) const;
  std::size_t column_index(const std::string& column) const;
};

// x_i = x_min + i (x_max - x_min) / (steps - 1). Columns x,tau,re_psi,im_psi,est_error.
Table field_table(const ModelParams& mp, double t, double x_min, double x_max, int steps,
                  FieldMethod method);

// Exact field against the regime-selected leading term on [0, 1 - tau].
// Columns x,re_exact,im_exact,re_asym,im_asym,abs_err,regime.
Table compare_table(const ModelParams& mp, double t, int steps, double delta_reg = 0.0);

// Inputs shared by the named checks; empty or non-finite fields select the
// per-check defaults documented in check_names().
struct CheckParams {
  std::vector<double> eps;
  int n = 0;
  double tau = std::numeric_limits<double>::quiet_NaN();
  double xi = std::numeric_limits<double>::quiet_NaN();
  int x_steps = 0;
  int samples = 0;
  std::uint64_t seed = 20240601;
};

const std::vector<std::string>& check_names();
Table run_check(const std::string& name, const CheckParams& params);

// Least-squares slope of log(err) against log(eps).
double fitted_order(const std::vector<double>& eps, const std::vector<double>& err);

}  // namespace adia
