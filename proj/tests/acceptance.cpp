// Runs every acceptance criterion through the named checks and prints one
// PASS or FAIL line per criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "adia/runs.hpp"
#include "adia/spectrum.hpp"

using namespace adia;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double column_max(const Table& t, const std::string& col) {
  double m = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) m = std::max(m, t.number(i, col));
  return m;
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

CheckParams with_eps(std::vector<double> eps) {
  CheckParams p;
  p.eps = std::move(eps);
  return p;
}

// Consecutive log2 error ratios of an order table must all lie in 1 +- 0.3.
Verdict order_one(const Table& t) {
  bool ok = true;
  std::string d = "log2 ratios";
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const double r = std::log2(t.number(i - 1, "err") / t.number(i, "err"));
    ok = ok && std::abs(r - 1.0) <= 0.3;
    d += " " + num(r);
  }
  return {ok && t.rows.size() >= 3, d + ", fit " + num(t.number(0, "order_fit"))};
}

Verdict c1() {
  const Table t = run_check("difference", CheckParams{});
  bool ok = t.rows.size() >= 50;
  double worst = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    ok = ok && t.number(i, "residual") <= t.number(i, "bound");
    worst = std::max(worst, t.number(i, "residual") / t.number(i, "bound"));
  }
  return {ok, std::to_string(t.rows.size()) + " samples, worst residual/bound " + num(worst)};
}

Verdict c2() {
  const Table t = run_check("r0", CheckParams{});
  const double res = column_max(t, "rel_residual"), mod = column_max(t, "modulus_error");
  return {res <= 1e-8 && mod <= 1e-9 && t.rows.size() >= 40,
          "residual " + num(res) + ", modulus error " + num(mod)};
}

Verdict c3() {
  const double e = column_max(run_check("closed-form", CheckParams{}), "abs_err");
  return {e <= 1e-12, "max error " + num(e)};
}

Verdict c4() {
  const Table t = run_check("legendre", CheckParams{});
  const double e = std::max(column_max(t, "residual1"), column_max(t, "residual2"));
  return {e <= 1e-7, "max residual " + num(e)};
}

Verdict c5() {
  const Table t = run_check("special-asymptotics", CheckParams{});
  std::vector<double> zeta, f;
  bool a_ok = true;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const std::string fn = std::get<std::string>(t.rows[i][0]);
    const double v = t.number(i, "value");
    if (fn == "zeta") zeta.push_back(v);
    if (fn == "F") f.push_back(v);
    if (fn == "a") a_ok = a_ok && v <= t.number(i, "bound");
  }
  bool mono = f.size() == 7;
  for (std::size_t i = 1; i < f.size(); ++i) mono = mono && f[i] < f[i - 1];
  const double var = spread(zeta);
  return {var <= 3.0 && a_ok && mono, "zeta variation x" + num(var) + ", a within bound " +
                                          (a_ok ? "yes" : "no") + ", F monotone " + (mono ? "yes" : "no")};
}

Verdict c6() {
  const double cv = column_max(run_check("crossval", CheckParams{}), "abs_diff");
  const Table it = run_check("interface", CheckParams{});
  const double vj = column_max(it, "value_jump"), dj = column_max(it, "derivative_jump");
  return {cv <= 1e-5 && vj <= 1e-6 && dj <= 1e-5,
          "contour vs series " + num(cv) + ", value jump " + num(vj) + ", derivative jump " + num(dj)};
}

Verdict c7() {
  const auto start = std::chrono::steady_clock::now();
  const Table t = run_check("oracle", CheckParams{});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double coarse = t.number(0, "deviation"), fine = t.number(1, "deviation");
  const double ratio = coarse / fine;
  return {fine <= 1e-3 && coarse <= 1e-3 && ratio >= 3.0 && ratio <= 5.5 && secs <= 120.0,
          "deviation " + num(coarse) + " -> " + num(fine) + " (ratio " + num(ratio) + "), " +
              num(secs) + " s"};
}

Verdict c8() { return order_one(run_check("adiabatic", with_eps({0.1, 0.05, 0.025}))); }

Verdict c9() {
  const Table t = run_check("transition", with_eps({0.1, 0.05}));
  // Rows come in eps-major order with three tau values per eps.
  bool ok = t.rows.size() == 6;
  std::string d = "C drift";
  for (std::size_t j = 0; ok && j < 3; ++j) {
    const double r = spread({t.number(j, "c"), t.number(j + 3, "c")});
    ok = ok && r <= 2.0;
    d += " x" + num(r);
  }
  return {ok, d};
}

Verdict c10() {
  const Table t = run_check("aftermath", with_eps({0.1, 0.05}));
  const double drift = spread({t.number(0, "c"), t.number(1, "c")});
  const Table r = run_check("resonance", CheckParams{});
  // Interior local maxima of |Psi_3| near an earlier threshold.
  std::string peaks;
  bool found = false;
  for (std::size_t i = 1; i + 1 < r.rows.size(); ++i) {
    const double v = r.number(i, "abs_psi");
    if (v > r.number(i - 1, "abs_psi") && v > r.number(i + 1, "abs_psi")) {
      const double tau = r.number(i, "tau");
      peaks += " " + num(tau);
      for (int m : {1, 2}) found = found || std::abs(tau - tau_threshold(m)) <= 0.5;
    }
  }
  return {drift <= 2.0 && found, "C " + num(t.number(0, "c")) + ", " + num(t.number(1, "c")) +
                                     " (x" + num(drift) + "), |Psi_3| maxima at tau" + peaks};
}

Verdict c11() {
  const double c = run_check("decay", CheckParams{}).number(0, "c_fit");
  return {c > 0.0 && c < 1.0, "c = " + num(c)};
}

Verdict c12() {
  CheckParams p = with_eps({0.1, 0.05, 0.025});
  p.xi = 0.5;
  return order_one(run_check("exterior", p));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"difference equation residual", c1},
      {"R0 equation and unit modulus", c2},
      {"closed-form action values", c3},
      {"Legendre identities", c4},
      {"special function asymptotics", c5},
      {"contour vs series and interface continuity", c6},
      {"Crank-Nicolson oracle", c7},
      {"adiabatic order", c8},
      {"transition constant stability", c9},
      {"aftermath constant and resonance peak", c10},
      {"exterior decay rate", c11},
      {"exterior leading order", c12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
