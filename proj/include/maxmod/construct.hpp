#pragma once

#include <vector>

#include "maxmod/conformal.hpp"

namespace maxmod {

// Error contract of the modeled entire function: |f(e^w)| sits within
// +-exp(-1) of exp(Re G(w)) on the tract (for Re w > L + 1) and below
// exp(-1) off it.
struct PerturbationBound {
  double M_const = 12.182493960703473;  // exp(2.5)

  double L() const { return std::log(M_const); }
  double threshold() const { return std::exp(-1.0); }
  void validate() const {
    if (!(L() > 2)) throw GeometryError("PerturbationBound: log M must exceed 2");
  }
};

struct PhiEvaluation {
  int sector = 0;
  std::vector<double> delta;
  bool crossing_found = false;
  double t_star = 0.0;  // least grid abscissa in I_n where the shaft takes over
  double value = 0.0;   // t_star - x_n
  double lo = 0.0;      // robust interval under the adversarial band
  double hi = 0.0;
  std::vector<GapProfilePoint> profile;
};

// phi_n from the grid columns of I_n: the first column where the shaft
// column-max of |f| reaches the run column-max, offset by x_n.  The robust
// interval re-evaluates both crossings with the modulus band applied in the
// two adversarial directions.
PhiEvaluation phi_n(const HarmonicSolution& sol, const TractGeometry& tract,
                    int sector, const PerturbationBound& bound);

struct DeltaSolveOptions {
  double tol = 0.0;         // 0: per-sector min(1e-3, eps/80)
  int max_sweeps = 5;
  long solve_budget = 400;  // harmonic solves
  double grid_h = 0.0;      // 0: eps_min/96
  SolverOptions solver;
};

struct DeltaSolveReport {
  std::vector<double> delta;          // full vector, all sectors of the tract
  std::vector<double> phi_values;     // per tuned sector, at the returned delta
  std::vector<std::pair<double, double>> endpoint_values;  // phi at 0 and eps/8
  bool converged = false;
  int sweeps = 0;
  long solves = 0;
};

// Coordinate bisection with an outer Gauss-Seidel loop: each tuned sector's
// delta is bisected on [0, eps/8] (others frozen) until |phi_n| < tol for
// all of them simultaneously.  Every harmonic re-solve counts against the
// budget; endpoint signs are asserted on the first sweep.
DeltaSolveReport solve_delta(const LogSpec& spec, double ell,
                             const std::vector<int>& tuned_sectors,
                             const DeltaSolveOptions& opts = {});

// Certificate margins are log-scale surpluses of the corresponding linear
// inequality, each already padded by the 2 exp(-1) robustness slack; the
// certificate is robust when all four are positive.
struct DiscontinuityCertificate {
  int sector = 0;
  double x_n = 0.0;
  double achieved = 0.0;     // real part of the certified transfer
  double target_miss = 0.0;  // |achieved - x_n|
  double margin_crosscut = 0.0;
  double margin_gap = 0.0;
  double margin_containment = 0.0;
  double margin_transfer = 0.0;
  bool robust = false;
};

DiscontinuityCertificate certify_discontinuity(const HarmonicSolution& sol,
                                               const TractGeometry& tract,
                                               int sector,
                                               const PerturbationBound& bound);

// exp of log-coordinates: (x, y) -> (e^x, y mod 2 pi).
std::vector<std::pair<double, double>> mlog_to_m(
    const std::vector<std::pair<double, double>>& points);

}  // namespace maxmod
