#include <complex>

#include "doctest.h"
#include "maxmod/logcomplex.hpp"

using namespace maxmod;

namespace {
// Deterministic LCG so property samples are reproducible.
struct Lcg {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  double next(double lo, double hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    double u = static_cast<double>(s >> 11) / 9007199254740992.0;
    return lo + (hi - lo) * u;
  }
};
}  // namespace

TEST_CASE("logcomplex round trip and field arithmetic") {
  Lcg rng;
  for (int k = 0; k < 500; ++k) {
    std::complex<double> a{rng.next(-20, 20), rng.next(-20, 20)};
    std::complex<double> b{rng.next(-20, 20), rng.next(-20, 20)};
    if (std::abs(a) < 1e-6 || std::abs(b) < 1e-6) continue;
    LogComplex la = LogComplex::from_complex(a);
    LogComplex lb = LogComplex::from_complex(b);
    CHECK(std::abs(la.to_complex() - a) <= 1e-12 * std::abs(a));
    CHECK(std::abs((la * lb).to_complex() - a * b) <= 1e-11 * std::abs(a * b));
    CHECK(std::abs((la / lb).to_complex() - a / b) <= 1e-11 * std::abs(a / b));
    std::complex<double> s = a + b;
    LogComplex ls = la + lb;
    if (std::abs(s) > 1e-9 * std::abs(a)) {
      CHECK(std::abs(ls.to_complex() - s) <= 1e-9 * std::abs(s));
    }
  }
}

TEST_CASE("logcomplex survives astronomically large exponents") {
  // exp(exp(r^2))-scale values: the log-modulus field itself is huge.
  LogComplex w = LogComplex::from_log_polar(2.7e43, 1.0);
  LogComplex v = LogComplex::from_log_polar(2.7e43 - 5.0, -2.0);
  LogComplex p = w * v;
  CHECK(p.log_modulus == doctest::Approx(5.4e43 - 5.0));
  LogComplex s = w + v;
  CHECK(s.log_modulus == doctest::Approx(2.7e43).epsilon(1e-12));
}

TEST_CASE("logcomplex exact cancellation yields zero") {
  LogComplex one = LogComplex::from_real(1.0);
  LogComplex neg = LogComplex::from_real(-1.0);
  CHECK((one + neg).is_zero);
  CHECK((one - one).is_zero);
}

TEST_CASE("argument wrapping stays in (-pi, pi]") {
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(0.5) == doctest::Approx(0.5));
  Lcg rng;
  for (int k = 0; k < 200; ++k) {
    double a = wrap_angle(rng.next(-50, 50));
    CHECK(a > -kPi - 1e-15);
    CHECK(a <= kPi + 1e-15);
  }
}

TEST_CASE("log-sum-exp helpers") {
  CHECK(log_sum_exp(0.0, 0.0) == doctest::Approx(std::log(2.0)));
  CHECK(log_sum_exp(1000.0, 0.0) == doctest::Approx(1000.0));
  CHECK(log_diff_exp(std::log(3.0), std::log(1.0)) == doctest::Approx(std::log(2.0)));
  CHECK(log_diff_exp(5.0, 5.0) == -std::numeric_limits<double>::infinity());
}
