#include <cmath>

#include "doctest.h"
#include "maxmod/polya.hpp"

using namespace maxmod;

namespace {
QuadratureParams quad(int npu) {
  QuadratureParams q;
  q.nodes_per_unit = npu;
  return q;
}

std::complex<double> to_c(const LogComplex& w) { return w.to_complex(); }
}  // namespace

TEST_CASE("exterior decay and orientation") {
  // Independent oracle: plain trapezoid at three node counts, Richardson
  // extrapolated on the h^2 leading term.
  std::complex<double> z{-5.0, 0.0};
  std::complex<double> t16 = to_c(polya_g_plain(z, quad(16)));
  std::complex<double> t32 = to_c(polya_g_plain(z, quad(32)));
  std::complex<double> t64 = to_c(polya_g_plain(z, quad(64)));
  std::complex<double> richardson = t64 + (t64 - t32) / 3.0;
  CHECK(std::abs(t32 - t16) > std::abs(t64 - t32));  // converging

  std::complex<double> g5 = to_c(polya_g(z, quad(64)));
  CHECK(std::abs(g5 - richardson) < 1e-5);
  // Leading asymptotic is 1/z: value below 1, negative real at z = -5.
  CHECK(std::abs(g5) < 1.0);
  CHECK(std::abs(g5 - std::complex<double>(-0.2, 0.0)) < 0.05);

  // |g(z)| |z| bounded: constant measured at z = -10, doubled.
  double C = std::abs(to_c(polya_g({-10.0, 0.0}, quad(64)))) * 10.0;
  CHECK(std::abs(g5) * 5.0 <= 2.0 * C);
}

TEST_CASE("interior dominant term") {
  LogComplex g3 = polya_g({3.0, 0.0}, quad(64));
  CHECK(g3.log_modulus == doctest::Approx(std::exp(3.0)).epsilon(1e-8));
  // e^3 is about 20.0855; the correction is exponentially below it.
  CHECK(std::abs(g3.log_modulus - 20.085536923187668) < 1e-6);
}

TEST_CASE("conjugate symmetry of the contour") {
  for (std::complex<double> z :
       {std::complex<double>{2.0, 0.7}, std::complex<double>{-3.0, 1.4},
        std::complex<double>{1.0, 2.6}}) {
    LogComplex a = polya_g(std::conj(z), quad(64));
    LogComplex b = conj(polya_g(z, quad(64)));
    CHECK(a.log_modulus == doctest::Approx(b.log_modulus).epsilon(1e-10));
    CHECK(std::abs(std::remainder(a.argument - b.argument, 2 * kPi)) < 1e-10);
  }
}

TEST_CASE("node doubling self-consistency below 1e-8") {
  for (std::complex<double> z :
       {std::complex<double>{-5.0, 0.0}, std::complex<double>{3.0, 0.0},
        std::complex<double>{-1.0, 4.0}, std::complex<double>{2.0, 2.0}}) {
    REQUIRE(dist_to_strip_boundary(z) >= 0.5);
    LogComplex a = polya_g(z, quad(64));
    LogComplex b = polya_g(z, quad(128));
    CHECK(std::abs(a.log_modulus - b.log_modulus) <=
          1e-8 * std::max(1.0, std::abs(b.log_modulus)));
  }
}

TEST_CASE("contour proximity is rejected") {
  QuadratureParams q = quad(64);
  q.min_contour_distance = 0.05;
  CHECK_THROWS_AS(polya_g({0.0, 0.01}, q), EvalError);
  CHECK_THROWS_AS(polya_g({4.0, kPi - 0.001}, q), EvalError);
}

TEST_CASE("sum reduces to a single translated copy") {
  PolyaSum one;
  one.terms = 1;
  std::complex<double> z{2.5, 0.3};
  LogComplex s = polya_sum(z, one);
  LogComplex g = polya_g(z, one.quad);  // a_0 = 1, b_0 = 0
  CHECK(s.log_modulus == doctest::Approx(g.log_modulus).epsilon(1e-14));
  CHECK(s.argument == doctest::Approx(g.argument));
}

TEST_CASE("sum is dominated by the strip the point sits in") {
  PolyaSum m;
  m.terms = 3;
  // Deep inside strip 1: b_1 = 1 + 4 pi i, a_1 = 2.
  std::complex<double> z = std::complex<double>{1.0, 4.0 * kPi} + 1.5;
  LogComplex s = polya_sum(z, m);
  LogComplex g = polya_g(2.0 * (z - std::complex<double>{1.0, 4.0 * kPi}), m.quad);
  CHECK(std::abs(s.log_modulus - g.log_modulus) <= 1e-6 * std::abs(g.log_modulus));
  CHECK(polya_strip_index(z, m) == 1);
  CHECK(polya_strip_index({-2.0, 0.0}, m) == -1);
}

TEST_CASE("sum stays small left of all strips") {
  PolyaSum m;
  m.terms = 3;
  LogComplex s = polya_sum({-2.0, 0.0}, m);
  CHECK(s.log_modulus < 0.0);
}
