#include <cmath>

#include "doctest.h"
#include "maxmod/radii.hpp"

using namespace maxmod;

TEST_CASE("normalization leaves large radii alone") {
  RadiiSpec spec;
  spec.r = {std::exp(6.0), std::exp(7.0)};
  auto [lambda, ls] = normalize_radii(spec, 2.5);
  CHECK(lambda == 1.0);
  CHECK(ls.x[0] == doctest::Approx(6.0));
  CHECK(ls.x[1] == doctest::Approx(7.0));
}

TEST_CASE("normalization rescales small radii by a power of two") {
  RadiiSpec spec;
  spec.r = {1.0, 2.0, 4.0};
  auto [lambda, ls] = normalize_radii(spec, 2.5);
  // Smallest power of 2 with lambda * 1 > e^{5.5} ~ 244.7.
  CHECK(lambda == 256.0);
  CHECK(ls.x[0] == doctest::Approx(std::log(256.0)));
}

TEST_CASE("non-increasing radii are rejected") {
  RadiiSpec spec;
  spec.r = {2.0, 2.0};
  CHECK_THROWS_AS(normalize_radii(spec, 2.5), GeometryError);
  RadiiSpec empty;
  CHECK_THROWS_AS(normalize_radii(empty, 2.5), GeometryError);
}

TEST_CASE("geometric growth hypothesis is enforced when stated") {
  RadiiSpec spec;
  spec.r = {std::exp(6.0), std::exp(6.5)};
  spec.geometric_C = std::exp(1.0);
  CHECK_THROWS_AS(spec.validate(), GeometryError);
  spec.r = {std::exp(6.0), std::exp(7.2)};
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("epsilon selection at half the admissible cap") {
  auto eps = choose_epsilons({6.0, 7.0, 9.0});
  CHECK(eps[0] == doctest::Approx(1.0 / 32.0));  // min(1, 6, 1/2)/16
  CHECK(eps[1] == doctest::Approx(1.0 / 32.0));  // min(2, 1, 1/2)/16
  CHECK(eps[2] == doctest::Approx(1.0 / 32.0));  // last: forward gap infinite

  auto equal = choose_epsilons({6.0, 7.0, 8.0, 9.0});
  for (double e : equal) CHECK(e == doctest::Approx(1.0 / 32.0));
}

TEST_CASE("logspec invariants") {
  LogSpec ls;
  ls.x = {6.0, 7.0};
  ls.eps = choose_epsilons(ls.x);
  ls.L = 2.5;
  CHECK_NOTHROW(ls.validate());
  ls.x = {5.0, 7.0};  // x_1 below L + 3
  ls.eps = choose_epsilons(ls.x);
  CHECK_THROWS_AS(ls.validate(), GeometryError);
}
