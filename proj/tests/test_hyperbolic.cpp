#include <cmath>
#include <memory>

#include "doctest.h"
#include "maxmod/hyperbolic.hpp"
#include "oracles.hpp"

using namespace maxmod;
using namespace maxmod::testing;

namespace {
TractGeometry small_tract() {
  LogSpec ls = small_spec({6.0});
  return build_tract(ls, {0.0}, 0.125, 1);
}
}  // namespace

TEST_CASE("density bounds from the boundary distance") {
  TractGeometry t = small_tract();
  double e = 1.0 / 32.0;
  std::complex<double> center{6.0 + e / 16.0, -0.5};  // shaft center, d = eps/16
  DensityBound b = density_bounds(t, center);
  CHECK(b.lower == doctest::Approx(8.0 / e));
  CHECK(b.upper == doctest::Approx(32.0 / e));
  CHECK(b.lower <= b.upper);
  CHECK_THROWS_AS(density_bounds(t, {100.0, 0.0}), GeometryError);
}

TEST_CASE("upper path estimate on a centered run segment") {
  TractGeometry t = small_tract();
  // Mid-run at height 1/2: boundary distance is 1/2, so the integrand is 4.
  std::vector<std::complex<double>> path{{2.0, 0.5}, {4.0, 0.5}};
  CHECK(hyp_dist_upper(t, path) == doctest::Approx(8.0).epsilon(0.01));
  CHECK(hyp_dist_upper(t, {{2.0, 0.5}}) == 0.0);
}

TEST_CASE("channel lower bound reproduces the displayed chain") {
  TractGeometry t = small_tract();
  double e = 1.0 / 32.0;
  double y = -e / 64.0;
  std::complex<double> a{t.xR4(0) + e / 8.0, y};
  std::complex<double> b{t.xR4(0), y};
  // Horizontal span eps/8 against thickness eps/32.
  CHECK(hyp_dist_lower_rect(t, a, b, 1, 3) == doctest::Approx(4.0));
  std::complex<double> mid{t.xR4(0) + e / 16.0, y};
  CHECK(hyp_dist_lower_rect(t, mid, b, 1, 3) == doctest::Approx(2.0));
  CHECK(hyp_dist_lower_rect(t, a, a, 1, 3) == 0.0);
  CHECK_THROWS_AS(hyp_dist_lower_rect(t, {0.0, 0.5}, a, 1, 3), GeometryError);
}

TEST_CASE("half-plane distance closed form") {
  CHECK(halfplane_distance({1.0, 0.0}, {std::exp(2.0), 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(halfplane_distance({1.0, 0.0}, {1.0, 0.0}) == 0.0);
  std::complex<double> w1{2.0, 1.0}, w2{0.5, -3.0};
  CHECK(halfplane_distance(w1, w2) == doctest::Approx(halfplane_distance(w2, w1)));
  CHECK_THROWS_AS(halfplane_distance({-1.0, 0.0}, {1.0, 0.0}), GeometryError);
  // Log-polar variant agrees on moderate values.
  double d1 = halfplane_distance(w1, w2);
  double d2 = halfplane_distance_logpolar(std::log(std::abs(w1)), std::arg(w1),
                                          std::log(std::abs(w2)), std::arg(w2));
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
  // And survives astronomically large moduli.
  CHECK(halfplane_distance_logpolar(2000.0, 0.0, 1000.0, 0.0) ==
        doctest::Approx(500.0).epsilon(1e-9));
}

TEST_CASE("density decays under rightward translation") {
  CHECK(rho_translation_monotone({1.0, 0.0}, 1.0));
  CHECK(rho_translation_monotone({5.0, 2.0}, 0.1));
  for (int k = 1; k <= 100; ++k) {
    CHECK(rho_translation_monotone({0.05 * k, 0.3 * k}, 0.01 * k));
  }
  CHECK_THROWS_AS(rho_translation_monotone({1.0, 0.0}, 0.0), GeometryError);
}

TEST_CASE("distortion bound on the solved half-strip") {
  auto sol = std::make_shared<HarmonicSolution>(solve_halfstrip(1.0 / 64.0, true));
  ConjugatePair pair = harmonic_conjugate(sol);
  AhlforsCheck c = verify_ahlfors_box(pair, -1.0, 1.0, 2.0, 5.0);
  CHECK(c.applicable);
  CHECK(c.integral == doctest::Approx(1.5));
  CHECK(c.pass);
  // Too-close segments are inapplicable, not failed.
  AhlforsCheck narrow = verify_ahlfors_box(pair, -1.0, 1.0, 2.0, 2.5);
  CHECK(!narrow.applicable);
  CHECK(!narrow.pass);
}

TEST_CASE("distortion bound across a winding") {
  LogSpec ls = small_spec({6.0});
  auto tract = std::make_shared<TractGeometry>(build_tract(ls, {0.0}, 0.125, 1));
  auto sol = std::make_shared<HarmonicSolution>(solve_reG(*tract, ls.eps[0] / 96.0));
  ConjugatePair pair = harmonic_conjugate(sol);
  // Pure run pair.
  AhlforsCheck runs = verify_ahlfors(pair, *tract, 2.0, 5.0);
  CHECK(runs.applicable);
  CHECK(runs.pass);
  // Pair straddling the winding: the back channel contributes length/height.
  double e = ls.eps[0];
  AhlforsCheck wind = verify_ahlfors(pair, *tract, 5.5, 6.0 + 1.8 * e);
  CHECK(wind.applicable);
  CHECK(wind.integral > 10.0);
  CHECK(wind.pass);
}
