#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace maxmod {

inline constexpr double kPi = 3.14159265358979323846;

// Thrown when an evaluation hits a precondition violation (point too close
// to an integration contour, non-finite intermediate, bad parameters).
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
  if (!std::isfinite(a)) throw EvalError("wrap_angle: non-finite angle");
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

// A nonzero complex value stored as (log |w|, arg w).  The log-modulus may be
// astronomically large (it is itself a double, not the modulus), so values
// like exp(exp(r^2)) are representable for any desk-scale r.
struct LogComplex {
  double log_modulus = -std::numeric_limits<double>::infinity();
  double argument = 0.0;  // in (-pi, pi] when is_zero is false
  bool is_zero = true;

  static LogComplex zero() { return LogComplex{}; }

  static LogComplex from_log_polar(double lm, double arg) {
    if (!std::isfinite(lm)) {
      if (lm == -std::numeric_limits<double>::infinity()) return zero();
      throw EvalError("LogComplex: non-finite log-modulus");
    }
    LogComplex w;
    w.log_modulus = lm;
    w.argument = wrap_angle(arg);
    w.is_zero = false;
    return w;
  }

  static LogComplex from_complex(std::complex<double> z) {
    if (z == std::complex<double>(0.0, 0.0)) return zero();
    return from_log_polar(std::log(std::abs(z)), std::arg(z));
  }

  static LogComplex from_real(double x) {
    if (x == 0.0) return zero();
    return from_log_polar(std::log(std::abs(x)), x > 0 ? 0.0 : kPi);
  }

  // Only valid when |log_modulus| is small enough for a double.
  std::complex<double> to_complex() const {
    if (is_zero) return {0.0, 0.0};
    if (log_modulus > 700.0) throw EvalError("LogComplex::to_complex overflow");
    double m = std::exp(log_modulus);
    return {m * std::cos(argument), m * std::sin(argument)};
  }
};

inline LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero || b.is_zero) return LogComplex::zero();
  return LogComplex::from_log_polar(a.log_modulus + b.log_modulus,
                                    a.argument + b.argument);
}

inline LogComplex operator/(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero) throw EvalError("LogComplex: division by zero");
  if (a.is_zero) return LogComplex::zero();
  return LogComplex::from_log_polar(a.log_modulus - b.log_modulus,
                                    a.argument - b.argument);
}

inline LogComplex conj(const LogComplex& a) {
  if (a.is_zero) return a;
  return LogComplex::from_log_polar(a.log_modulus, -a.argument);
}

// Multiply by a positive real scale: shifts log-modulus by log(c).
inline LogComplex scale(const LogComplex& a, double c) {
  if (c <= 0.0) throw EvalError("LogComplex::scale requires c > 0");
  if (a.is_zero) return a;
  return LogComplex::from_log_polar(a.log_modulus + std::log(c), a.argument);
}

// Complex addition in log scale.  Exact in argument arithmetic; the modulus
// update is a complex log-sum-exp anchored at the larger term.
LogComplex operator+(const LogComplex& a, const LogComplex& b);

inline LogComplex operator-(const LogComplex& a) {
  if (a.is_zero) return a;
  return LogComplex::from_log_polar(a.log_modulus, a.argument + kPi);
}

inline LogComplex operator-(const LogComplex& a, const LogComplex& b) {
  return a + (-b);
}

// log(e^x + e^y), safe for any magnitudes.
inline double log_sum_exp(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  double hi = x > y ? x : y;
  double lo = x > y ? y : x;
  return hi + std::log1p(std::exp(lo - hi));
}

// log(e^x - e^y) for x > y; -inf when equal.
inline double log_diff_exp(double x, double y) {
  if (y == -std::numeric_limits<double>::infinity()) return x;
  if (x < y) throw EvalError("log_diff_exp: negative difference");
  if (x == y) return -std::numeric_limits<double>::infinity();
  return x + std::log1p(-std::exp(y - x));
}

}  // namespace maxmod
