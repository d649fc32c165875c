#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace adia {

using cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr cx kI{0.0, 1.0};

enum class ErrorCode {
  InvalidArgument = 1,
  BranchViolation,
  PoleAt,
  NoEigenvalue,
  ContinuationFailure,
  QuadratureFailure,
  ContourClash,
  AccuracyLoss,
  OnCut,
  TruncationTooSmall,
  TraceDiverged,
  LinearSolveFailure,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Which cut plane a point belongs to, or which one-sided limit onto the real
// axis is meant. C0 = C minus {|Re p| >= 1 on the real axis}; C1 = C minus
// (-inf, 1].
enum class Sheet { C0, C1 };
enum class Limit { None, PlusI0, MinusI0 };

struct CxPoint {
  cx z;
  Sheet sheet = Sheet::C0;
  Limit limit = Limit::None;

  CxPoint() = default;
  CxPoint(cx v, Sheet s = Sheet::C0, Limit l = Limit::None)
      : z(v), sheet(s), limit(l) {}
  CxPoint(double re, double im = 0.0, Sheet s = Sheet::C0,
          Limit l = Limit::None)
      : z(re, im), sheet(s), limit(l) {}

  static CxPoint above(double x, Sheet s = Sheet::C0) {
    return {cx(x, 0.0), s, Limit::PlusI0};
  }
  static CxPoint below(double x, Sheet s = Sheet::C0) {
    return {cx(x, 0.0), s, Limit::MinusI0};
  }
};

}  // namespace adia
