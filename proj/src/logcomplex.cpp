#include "maxmod/logcomplex.hpp"

namespace maxmod {

LogComplex operator+(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero) return b;
  if (b.is_zero) return a;

  // Anchor at the larger modulus: a + b = big * (1 + t e^{i p}).
  const LogComplex& big = (a.log_modulus >= b.log_modulus) ? a : b;
  const LogComplex& sml = (a.log_modulus >= b.log_modulus) ? b : a;
  double t = std::exp(sml.log_modulus - big.log_modulus);  // in [0, 1]
  double p = sml.argument - big.argument;
  double re = 1.0 + t * std::cos(p);
  double im = t * std::sin(p);
  // |1 + t e^{ip}|^2 = 1 + 2 t cos p + t^2, written via log1p for accuracy.
  double q = t * (2.0 * std::cos(p) + t);
  if (q <= -1.0) return LogComplex::zero();  // exact cancellation
  double lm = big.log_modulus + 0.5 * std::log1p(q);
  double arg = big.argument + std::atan2(im, re);
  return LogComplex::from_log_polar(lm, arg);
}

}  // namespace maxmod
