#include "adia/branchfns.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adia {

namespace {

bool on_real_axis(const CxPoint& p) { return p.z.imag() == 0.0; }

// Cut test for an untagged point. The branch points +-1 themselves are
// admitted: every one-sided limit agrees there.
bool on_cut(const CxPoint& p) {
  if (!on_real_axis(p)) return false;
  const double x = p.z.real();
  if (p.sheet == Sheet::C0) return std::abs(x) > 1.0;
  return x < 1.0;
}

std::string describe(const CxPoint& p) {
  std::ostringstream os;
  os << "(" << p.z.real() << "," << p.z.imag() << ") sheet "
     << (p.sheet == Sheet::C0 ? "C0" : "C1");
  return os.str();
}

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

void check_point(const CxPoint& p) {
  if (!std::isfinite(p.z.real()) || !std::isfinite(p.z.imag()))
    fail(ErrorCode::InvalidArgument, "non-finite point " + describe(p));
  if (p.limit != Limit::None) {
    if (!on_real_axis(p))
      fail(ErrorCode::BranchViolation,
           "limit tag on a point off the real axis: " + describe(p));
    return;
  }
  if (on_cut(p))
    fail(ErrorCode::BranchViolation, "point on the cut: " + describe(p));
}

cx q0(const CxPoint& p) {
  check_point(p);
  if (p.sheet == Sheet::C1) {
    // Q1 coincides with Q0 in the upper half plane.
    if (p.limit != Limit::None && p.z.real() < 1.0) {
      const double x = p.z.real();
      const double s = p.limit == Limit::PlusI0 ? 1.0 : -1.0;
      if (std::abs(x) < 1.0) return kI * (s * std::sqrt((1.0 - x) * (1.0 + x)));
      return cx(-std::sqrt((x - 1.0) * (x + 1.0)), 0.0);
    }
    return std::sqrt(p.z - 1.0) * std::sqrt(p.z + 1.0);
  }
  const double x = p.z.real();
  if (p.limit != Limit::None && std::abs(x) >= 1.0) {
    const double s = p.limit == Limit::PlusI0 ? 1.0 : -1.0;
    return cx(s * sgn(x) * std::sqrt((std::abs(x) - 1.0) * (std::abs(x) + 1.0)),
              0.0);
  }
  if (on_real_axis(p)) return kI * std::sqrt((1.0 - x) * (1.0 + x));
  return kI * std::sqrt((1.0 - p.z) * (1.0 + p.z));
}

cx l0(const CxPoint& p) {
  check_point(p);
  if (p.sheet == Sheet::C1) return l1(p);
  const double x = p.z.real();
  if (p.limit != Limit::None && std::abs(x) > 1.0) {
    const double s = p.limit == Limit::PlusI0 ? 1.0 : -1.0;
    return cx(sgn(x) * kPi, s * 2.0 * std::acosh(std::abs(x)));
  }
  if (on_real_axis(p)) return cx(2.0 * std::asin(std::clamp(x, -1.0, 1.0)), 0.0);
  return 2.0 * std::asin(p.z);
}

cx l0_prime(const CxPoint& p) {
  const cx q = q0(p);
  if (std::abs(q) == 0.0)
    fail(ErrorCode::PoleAt, "l0' is singular at the branch point");
  return 2.0 * kI / q;
}

cx l1(const CxPoint& p) {
  check_point(CxPoint(p.z, Sheet::C1, p.limit));
  const double x = p.z.real();
  if (p.limit != Limit::None && x < 1.0) {
    // Boundary values on (-inf, 1] from either side of the C1 cut.
    const double s = p.limit == Limit::PlusI0 ? 1.0 : -1.0;
    if (x > -1.0) {
      if (s > 0.0) return cx(2.0 * std::asin(x), 0.0);
      return cx(2.0 * kPi - 2.0 * std::asin(x), 0.0);
    }
    const cx above(-kPi, 2.0 * std::acosh(-x));
    if (s > 0.0) return above;
    return cx(3.0 * kPi, 2.0 * std::acosh(-x));
  }
  if (on_real_axis(p)) return cx(kPi, 2.0 * std::acosh(x));
  return kPi + 2.0 * kI * std::acosh(p.z);
}

cx l1_prime(const CxPoint& p) {
  const cx q = q0(CxPoint(p.z, Sheet::C1, p.limit));
  if (std::abs(q) == 0.0)
    fail(ErrorCode::PoleAt, "l1' is singular at the branch point");
  return 2.0 * kI / q;
}

cx int_l0(const CxPoint& p) {
  return p.z * l0(p) - 2.0 * kI * q0(p) - 2.0;
}

cx rho0(const CxPoint& p) {
  const cx q = q0(p);
  const cx d = q - p.z;
  if (std::abs(q + p.z) < 1e-300)
    fail(ErrorCode::PoleAt, "Q0(p) + p vanishes");
  return -(d * d);
}

cx q_real(double x) {
  if (std::abs(x) < 1.0) return kI * std::sqrt((1.0 - x) * (1.0 + x));
  return cx(std::sqrt((std::abs(x) - 1.0) * (std::abs(x) + 1.0)), 0.0);
}

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BranchViolation: return "BranchViolation";
    case ErrorCode::PoleAt: return "PoleAt";
    case ErrorCode::NoEigenvalue: return "NoEigenvalue";
    case ErrorCode::ContinuationFailure: return "ContinuationFailure";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::ContourClash: return "ContourClash";
    case ErrorCode::AccuracyLoss: return "AccuracyLoss";
    case ErrorCode::OnCut: return "OnCut";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::TraceDiverged: return "TraceDiverged";
    case ErrorCode::LinearSolveFailure: return "LinearSolveFailure";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_name(code)) + ": " + what);
}

}  // namespace adia
