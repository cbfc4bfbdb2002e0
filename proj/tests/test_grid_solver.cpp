#include <cmath>

#include "doctest.h"
#include "maxmod/solver.hpp"
#include "oracles.hpp"

using namespace maxmod;
using namespace maxmod::testing;

TEST_CASE("half-strip solve matches the explicit map within 1%") {
  HarmonicSolution sol = solve_halfstrip(1.0 / 64.0, true);
  CHECK(sol.log_u(sol.column_index(1.0), sol.grid.cell_y(0.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  int checked = 0;
  for (double x : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0}) {
    for (double y : {-0.75, -0.25, 0.0, 0.5}) {
      double exact = halfstrip_u({x, y});
      double got = std::exp(sol.log_u_interp({x, y}));
      CHECK(std::abs(got - exact) <= 0.01 * exact);
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("tent cap agrees away from the truncation") {
  HarmonicSolution sol = solve_halfstrip(1.0 / 64.0, false);
  for (double x : {0.5, 1.5, 2.5, 3.5, 4.5}) {
    double exact = halfstrip_u({x, 0.25});
    double got = std::exp(sol.log_u_interp({x, 0.25}));
    CHECK(std::abs(got - exact) <= 0.01 * exact);
  }
}

TEST_CASE("solution decays monotonically into the walls") {
  HarmonicSolution sol = solve_halfstrip(1.0 / 64.0, true);
  int i = sol.column_index(2.0);
  REQUIRE(i >= 0);
  double prev = -std::numeric_limits<double>::infinity();
  for (int j = 1; j < sol.grid.ny / 2; ++j) {  // wall at y = -1 up to center
    double cur = sol.log_u(i, j);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("halving the spacing moves probes by under 2%") {
  HarmonicSolution a = solve_halfstrip(1.0 / 32.0, true);
  HarmonicSolution b = solve_halfstrip(1.0 / 64.0, true);
  for (double x : {1.0, 2.5, 4.0}) {
    double ua = std::exp(a.log_u_interp({x, 0.25}));
    double ub = std::exp(b.log_u_interp({x, 0.25}));
    CHECK(std::abs(ua - ub) <= 0.02 * ub);
  }
}

TEST_CASE("discrete maximum principle on interior boxes") {
  HarmonicSolution sol = solve_halfstrip(1.0 / 32.0, true);
  const Grid& g = sol.grid;
  for (int bi : {10, 40, 90}) {
    int i0 = bi, i1 = bi + 30, j0 = 10, j1 = g.ny - 10;
    double interior = -1e300, rim = -1e300;
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) {
        if (g.state[g.at(i, j)] != kInterior) continue;
        double v = sol.log_u(i, j);
        bool on_rim = i == i0 || i == i1 || j == j0 || j == j1;
        (on_rim ? rim : interior) = std::max(on_rim ? rim : interior, v);
      }
    }
    CHECK(interior <= rim + 1e-9);
  }
}

TEST_CASE("winding tract solve is positive, normalized and gate-clearing") {
  LogSpec ls = small_spec({6.0});
  TractGeometry t = build_tract(ls, {0.0}, 0.125, 1);
  HarmonicSolution sol = solve_reG(t, ls.eps[0] / 96.0);
  // Normalization node.
  int i0 = sol.column_index(-1.0);
  REQUIRE(i0 >= 0);
  CHECK(sol.log_u(i0, sol.grid.cell_y(0.0)) == doctest::Approx(0.0).epsilon(1e-12));
  // Strict positivity of the scaled field inside.
  for (int j = 0; j < sol.grid.ny; ++j) {
    for (int i = 0; i < sol.grid.nx; ++i) {
      if (sol.grid.state[sol.grid.at(i, j)] == kInterior) {
        CHECK(sol.v[sol.grid.at(i, j)] > 0.0);
      }
    }
  }
  // The gate column clears Re G = 4 comfortably.
  int gate = sol.column_index(0.0);
  REQUIRE(gate >= 0);
  CHECK(sol.max_log_u_on_column(gate, 0.0, t.ell) > std::log(4.0));
  // The back channel multiplies Re G by roughly exp(pi len / height).
  double e = ls.eps[0];
  int ir = sol.column_index(t.xR4(0));
  int il = sol.column_index(t.xR3(0));
  REQUIRE(ir >= 0);
  REQUIRE(il >= 0);
  double gain = sol.max_log_u_on_column(ir, -e / 32.0, 0.0) -
                sol.max_log_u_on_column(il, -e / 32.0, 0.0);
  double predicted = kPi * (t.xR3(0) - t.xR4(0)) / (e / 32.0);
  CHECK(gain > 0.7 * predicted);
  CHECK(gain < 1.3 * predicted);
}

TEST_CASE("doubling the truncation leaves the trusted region in place") {
  LogSpec one = small_spec({6.0});
  TractGeometry t1 = build_tract(one, {0.0}, 0.125, 1);
  HarmonicSolution s1 = solve_reG(t1, one.eps[0] / 96.0);

  LogSpec two = small_spec({6.0, 7.0});
  TractGeometry t2 = build_tract(two, {0.0, 0.0}, 0.125, 2);
  HarmonicSolution s2 = solve_reG(t2, two.eps[0] / 96.0);

  for (std::complex<double> z : {std::complex<double>{-1.0, 0.25 * 0.125},
                                 std::complex<double>{2.0, 0.5},
                                 std::complex<double>{5.0, 0.3},
                                 std::complex<double>{5.9, 0.6}}) {
    double a = s1.log_u_interp(z);
    double b = s2.log_u_interp(z);
    CHECK(std::abs(a - b) < 0.01);  // 1% relative on u
  }
}

TEST_CASE("solver rejects an impossible budget") {
  SolverOptions opts;
  opts.max_sweeps = 2;
  Grid g = build_box_grid(0.0, 4.0, -1.0, 1.0, 1.0 / 32.0);
  CHECK_THROWS_AS(
      solve_dirichlet(std::move(g), zero_gauge(), CapCondition::tent(), {1.0, 0.0}, opts),
      SolverError);
}
