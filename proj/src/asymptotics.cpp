#include "adia/asymptotics.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <vector>

#include "adia/quadrature.hpp"
#include "adia/specialfns.hpp"

namespace adia {

namespace {

void check_args(const ModelParams& mp, double x, double t) {
  validate(mp);
  if (!std::isfinite(x) || !std::isfinite(t)) fail(ErrorCode::InvalidArgument, "non-finite x or t");
  if (x < 0.0) fail(ErrorCode::InvalidArgument, "x must be >= 0");
  if (mp.eps * t > 1.0) fail(ErrorCode::InvalidArgument, "eps * t must not exceed 1");
}

// exp(-i I / eps) with the phase reduced first.
cx phase_factor(double integral, double eps) {
  return std::polar(1.0, -std::fmod(integral / eps, 2.0 * kPi));
}

double tau_m(int m) { return 1.0 - kPi * (m - 0.5); }

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Adiabatic: return "adiabatic";
    case Regime::Transition: return "transition";
    case Regime::Aftermath: return "aftermath";
  }
  return "unknown";
}

cx adiabatic_leading(const ModelParams& mp, double x, double t) {
  check_args(mp, x, t);
  const double tau = mp.eps * t;
  if (x > 1.0 - tau + 1e-12) fail(ErrorCode::InvalidArgument, "x lies outside the well");
  const double ie = int_e_n(mp.n, tau);
  return c_n_phase(mp) * std::sqrt(dlnpn_dtau(mp.n, tau)) * phase_factor(ie, mp.eps) *
         psi_n(mp.n, tau, x);
}

cx outside_leading(const ModelParams& mp, double x, double t) {
  check_args(mp, x, t);
  const double tau = mp.eps * t;
  if (!(tau < tau_threshold(mp.n)))
    fail(ErrorCode::NoEigenvalue, "outside_leading needs tau < tau_n");
  const double xi = mp.eps * (x - (1.0 - tau));
  if (xi < -1e-12) fail(ErrorCode::InvalidArgument, "x lies inside the well");
  const double xp = std::max(0.0, xi);
  const cx pt = p_n_tilde(mp.n, tau, xp);
  cx decay = 0.0;
  if (xp > 0.0) {
    auto f = [&](double s) {
      const cx p = p_n_tilde(mp.n, tau, s);
      return std::sqrt((1.0 - p) * (1.0 + p));
    };
    AdaptiveOptions opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-12;
    decay = integrate_adaptive(f, 0.0, xp, opt).value;
  }
  const double sign = (mp.n % 2 == 1) ? 1.0 : -1.0;
  const cx phi = sign * pt * std::exp(-decay / mp.eps - 0.5 * kI * xp);
  const double ie = int_e_n(mp.n, tau);
  return c_n_phase(mp) * std::sqrt(dlnptilde_dtau(mp.n, tau, xp, pt)) *
         phase_factor(ie, mp.eps) * phi;
}

double big_z(const ModelParams& mp, double tau) {
  validate(mp);
  const double tn = tau_threshold(mp.n);
  if (tau > tn) fail(ErrorCode::InvalidArgument, "Z_n needs tau <= tau_n");
  if (tau == tn) return 0.0;
  return std::cbrt(3.0 / (4.0 * mp.eps) * int_e_n(mp.n, tau));
}

cx transition_leading(const ModelParams& mp, double x, double t) {
  check_args(mp, x, t);
  const double tau = mp.eps * t;
  const double tn = tau_threshold(mp.n);
  if (tau > tn) fail(ErrorCode::InvalidArgument, "transition_leading needs tau <= tau_n");
  if (x > 1.0 - tau + 1e-12) fail(ErrorCode::InvalidArgument, "x lies outside the well");
  const double z = big_z(mp, tau);
  const cx f = f_transition(std::polar(z, kPi / 6.0));
  // As tau -> tau_n, sqrt(d ln p_n / d tau / Z_n) -> (4 eps)^{1/6}, psi_n -> sin x.
  if (tn - tau < 1e-7) return c_n_phase(mp) * std::pow(4.0 * mp.eps, 1.0 / 6.0) * std::sin(x) * f;
  return c_n_phase(mp) * std::sqrt(dlnpn_dtau(mp.n, tau) / z) * psi_n(mp.n, tau, x) * f;
}

cx a_fn_asymptotic(double z, int derivative) {
  if (z == 0.0) fail(ErrorCode::InvalidArgument, "expansion needs z != 0");
  // a(z) = (1/2) sum_m (-1)^m / (3^m m!) Gamma(3m/2 + 1) (-i z)^{-(3m/2 + 1)}.
  static const std::vector<double> coef = [] {
    std::vector<double> c;
    double sign_fact = 1.0;  // (-1)^m / (3^m m!)
    for (int m = 0; m < 40; ++m) {
      if (m > 0) sign_fact *= -1.0 / (3.0 * m);
      c.push_back(0.5 * sign_fact * boost::math::tgamma(1.5 * m + 1.0));
    }
    return c;
  }();
  const cx w = -kI * z;
  const cx wr = std::pow(w, -0.5);  // w^{-1/2}
  cx wpow = 1.0 / w;                // w^{-(3m/2 + 1)}
  const cx step = wr * wr * wr;
  cx sum = 0.0;
  double prev = 1e300;
  for (int m = 0; m < 40; ++m, wpow *= step) {
    const double s = 1.5 * m + 1.0;
    cx term = coef[m] * wpow;
    if (derivative >= 1) term *= kI * s / w;
    if (derivative == 2) term *= kI * (s + 1.0) / w;
    const double mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    prev = mag;
    if (mag < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

cx a_fn_fast(double z, int derivative) {
  if (std::abs(z) >= 15.0) return a_fn_asymptotic(z, derivative);
  return a_fn(z, derivative);
}

double g0_integral(double d) {
  if (!(d > 0.0)) fail(ErrorCode::InvalidArgument, "g0_integral needs d > 0");
  const cx rot = std::polar(1.0, 0.25 * kPi);
  auto f = [&](double s) -> cx {
    if (s == 0.0) return (rot * zeta_fn(0.0)).real();
    return std::exp(-2.0 * s * d) * (rot * zeta_fn(cx(0.0, s)) + 2.0 * std::sqrt(s)).real();
  };
  const double smax = 20.0 / d;
  std::vector<double> breaks;
  for (double b : {0.01, 0.1, 1.0, 10.0})
    if (b < smax) breaks.push_back(b);
  AdaptiveOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-11;
  return integrate_adaptive(f, 0.0, smax, opt, breaks).value.real();
}

AftermathTerms aftermath_terms(const ModelParams& mp, double x, double t) {
  check_args(mp, x, t);
  const double eps = mp.eps;
  const double tau = eps * t;
  const double tn = tau_threshold(mp.n);
  if (tau < tn) fail(ErrorCode::InvalidArgument, "aftermath needs tau >= tau_n");
  if (x > 1.0 - tau + 1e-12) fail(ErrorCode::InvalidArgument, "x lies outside the well");
  const double scale = std::cbrt(4.0 * eps);
  AftermathTerms out;
  out.z_scaled = (tn - tau) / scale;
  const cx cn = c_n_phase(mp);
  const double sx = std::sin(x);
  out.t0 = std::pow(4.0 * eps, 1.0 / 6.0) * cn * sx *
           f_transition(std::polar(1.0, kPi / 6.0) * out.z_scaled);

  const double c1 = std::pow(0.5 * eps, 2.0 / 3.0);
  const cx c2 = -kI * (1.0 - tau) * eps / 16.0;
  auto term_at = [&](long k) {
    const double fk = k == 0 ? f0_constant() : ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(double(k), -1.5);
    const double z = (tau_m(mp.n - static_cast<int>(k)) - tau) / scale;
    return fk * (c1 * a_fn_fast(z, 0) + c2 * a_fn_fast(z, 2));
  };
  // Direct summation until the alternating tail is smooth, then repeated
  // averaging of consecutive partial sums.
  cx sum = 0.0;
  long k = 0;
  for (;; ++k) {
    const cx term = term_at(k);
    sum += term;
    if (k > mp.n + 20 && std::abs(term) < 1e-7 * std::max(std::abs(sum), 1e-300)) break;
    if (k > 1000000) fail(ErrorCode::TruncationTooSmall, "resonance series did not settle");
  }
  constexpr int kLevels = 8;
  std::vector<cx> partial{sum};
  for (int j = 1; j <= kLevels; ++j) partial.push_back(partial.back() + term_at(k + j));
  for (int lvl = 0; lvl < kLevels; ++lvl)
    for (std::size_t i = 0; i + 1 < partial.size() - lvl; ++i)
      partial[i] = 0.5 * (partial[i] + partial[i + 1]);
  sum = partial[0];
  out.r0 = cn * sx / std::pow(kPi, 1.5) * sum;

  const double d = tau - tn;
  if (d <= std::cbrt(eps)) {
    out.g0 = 0.0;
  } else {
    out.g0 = kI * cn * std::sqrt(2.0 / kPi) * eps * sx / d * g0_integral(d);
  }
  return out;
}

cx aftermath_sum(const ModelParams& mp, double x, double t) {
  const AftermathTerms a = aftermath_terms(mp, x, t);
  return a.t0 + a.r0 + a.g0;
}

double default_delta_reg(double eps) { return 5.0 * std::cbrt(eps); }

Regime classify_regime(const ModelParams& mp, double t, double delta_reg) {
  validate(mp);
  const double tau = mp.eps * t;
  if (tau > 1.0) fail(ErrorCode::InvalidArgument, "eps * t must not exceed 1");
  const double dr = delta_reg > 0.0 ? delta_reg : default_delta_reg(mp.eps);
  const double tn = tau_threshold(mp.n);
  if (tau > tn) return Regime::Aftermath;
  if (tn - tau >= dr) return Regime::Adiabatic;
  return Regime::Transition;
}

std::pair<cx, Regime> best_leading(const ModelParams& mp, double x, double t,
                                   double delta_reg) {
  const Regime r = classify_regime(mp, t, delta_reg);
  const double tau = mp.eps * t;
  const bool in = x <= 1.0 - tau;
  switch (r) {
    case Regime::Adiabatic:
      return {in ? adiabatic_leading(mp, x, t) : outside_leading(mp, x, t), r};
    case Regime::Transition:
      if (!in) fail(ErrorCode::InvalidArgument, "no exterior asymptotics near tau_n");
      return {transition_leading(mp, x, t), r};
    case Regime::Aftermath:
      if (!in) fail(ErrorCode::InvalidArgument, "no exterior asymptotics after tau_n");
      return {aftermath_sum(mp, x, t), r};
  }
  return {0.0, r};
}

}  // namespace adia
