#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "maxmod/grid.hpp"
#include "maxmod/tract.hpp"

namespace maxmod {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dirichlet data on the truncation cap.  Tent is the default hat profile
// (the exact shape washes out after normalization); Profile imposes given
// values, which the solver oracles use to remove the truncation error.
struct CapCondition {
  enum class Kind { Tent, Profile } kind = Kind::Tent;
  std::function<double(double)> profile;  // u(y) for Kind::Profile

  static CapCondition tent() { return {}; }
  static CapCondition exact(std::function<double(double)> f) {
    CapCondition c;
    c.kind = Kind::Profile;
    c.profile = std::move(f);
    return c;
  }
};

struct SolverOptions {
  double rel_residual = 1e-10;
  long max_sweeps = 1000000;
  double omega = 0.0;  // 0 selects the grid-size heuristic
  int check_every = 64;
};

// Per-node additive log-scale offset: the solver stores v with
// u = v * exp(gauge), which keeps the winding tract's enormous dynamic range
// inside double exponents.
using GaugeField = std::function<double(double, double)>;

GaugeField zero_gauge();

// Chain-calibrated gauge for a winding tract: linear strip growth along the
// runs, 1/theta growth through the back channels, measured neck offsets at
// the feeder and riser turns.
GaugeField chain_gauge(const TractGeometry& tract);

// Positive harmonic function vanishing on the tract boundary, Dirichlet cap
// data on the truncation line, normalized to 1 at z0.
struct HarmonicSolution {
  Grid grid;
  std::vector<double> v;      // scaled values; u = v exp(gauge) / exp(shift)
  std::vector<double> gauge;  // per node
  std::complex<double> z0{-1.0, 0.0};
  double log_shift = 0.0;  // log u_raw(z0); subtracted so u(z0) = 1
  double residual = 0.0;
  long sweeps = 0;

  double log_u(int i, int j) const;
  double log_u_interp(std::complex<double> z) const;
  // Max of log u over grid nodes in column i with y0 < y < y1.
  double max_log_u_on_column(int i, double y0, double y1) const;
  // Max of bilinear-interpolated log u over a vertical segment.
  double max_log_u_on_segment(double x, double y0, double y1,
                              int subsamples = 4) const;
  int column_index(double x) const;  // exact grid-line match or -1
};

HarmonicSolution solve_dirichlet(Grid grid, const GaugeField& gauge,
                                 const CapCondition& cap,
                                 std::complex<double> z0,
                                 const SolverOptions& opts = {});

// Builds the graded grid and the chain gauge and solves; h is the fine
// spacing along the back channels (eps_min/96 resolves them at 3 cells).
HarmonicSolution solve_reG(const TractGeometry& tract, double h,
                           const CapCondition& cap = CapCondition::tent(),
                           const SolverOptions& opts = {},
                           std::complex<double> z0 = {-1.0, 0.0});

}  // namespace maxmod
