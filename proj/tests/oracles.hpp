#pragma once

// Shared fixtures for the solver-level tests: the half-strip with its exact
// conformal map, and small winding tracts.

#include <cmath>
#include <complex>

#include "maxmod/radii.hpp"
#include "maxmod/solver.hpp"

namespace maxmod::testing {

// Half-strip (0, inf) x (-1, 1), normalized at z0 = 1:
//   G(z) = sinh(pi z / 2) / sinh(pi / 2).
inline std::complex<double> halfstrip_G(std::complex<double> z) {
  return std::sinh(kPi * z / 2.0) / std::sinh(kPi / 2.0);
}

inline double halfstrip_u(std::complex<double> z) { return halfstrip_G(z).real(); }

// Solve on the truncated half-strip; exact_cap pins the truncation values to
// the map so the comparison isolates the interior discretization error.
inline HarmonicSolution solve_halfstrip(double h, bool exact_cap,
                                        double x_len = 8.0) {
  Grid g = build_box_grid(0.0, x_len, -1.0, 1.0, h);
  CapCondition cap =
      exact_cap ? CapCondition::exact([x_len](double y) {
          return halfstrip_u({x_len, y});
        })
                : CapCondition::tent();
  SolverOptions opts;
  return solve_dirichlet(std::move(g), zero_gauge(), cap, {1.0, 0.0}, opts);
}

inline LogSpec small_spec(std::initializer_list<double> xs) {
  LogSpec ls;
  ls.x = xs;
  ls.eps = choose_epsilons(ls.x);
  ls.L = 2.5;
  return ls;
}

}  // namespace maxmod::testing
