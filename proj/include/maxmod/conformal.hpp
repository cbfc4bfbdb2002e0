#pragma once

#include <memory>

#include "maxmod/models.hpp"
#include "maxmod/solver.hpp"

namespace maxmod {

// Solver outputs are trusted up to one sector short of the truncation cap.
double trust_x_max(const TractGeometry& tract);

// Max of bilinear-interpolated log Re G over the vertical segment at x.
double max_log_reG_on_segment(const HarmonicSolution& sol, double x, double y0,
                              double y1, int subsamples = 4);

// Linear-scale wrapper; throws when the value exceeds double range.
double max_reG_on_segment(const HarmonicSolution& sol, double x, double y0,
                          double y1, int subsamples = 4);

struct EllResult {
  double ell = 0.0;              // largest passing half-height found
  double gate_max_log_u = 0.0;   // at the returned ell, delta = 0
  std::vector<std::pair<double, double>> tried;  // (ell, gate max log u)
};

// Bisects the anchor-box half-height until the gate clears Re G >= 4 with a
// 10% margin, for both delta endpoints of the first sectors.
EllResult verify_ell(const LogSpec& spec, int sectors,
                     std::pair<double, double> ell_range, double grid_h = 0.0,
                     const SolverOptions& opts = {});

struct GapProfilePoint {
  double t = 0.0;
  double shaft_log = 0.0;  // max log Re G over the shaft at Re z = t
  double run_log = 0.0;    // max log Re G over the upper run at Re z = t
};

struct GapResult {
  bool found = false;
  double t = 0.0;  // least grid abscissa from which the +1 gap holds
  double min_margin = 0.0;  // min over t' of log(e^{m4} - e^{m1}) ( > 0 )
  std::vector<GapProfilePoint> profile;
};

// Least grid t in I_n such that for every sampled t' >= t the shaft column
// max of Re G exceeds the run column max by more than 1.
GapResult verify_gap(const HarmonicSolution& sol, const TractGeometry& tract,
                     int sector);

// Harmonic conjugate by trapezoid path-integration along a spanning tree
// from the normalization point; stored in the same gauge frame as u.
struct ConjugatePair {
  std::shared_ptr<const HarmonicSolution> sol;
  std::vector<double> w;        // Im G = w exp(gauge - shift)
  double cr_residual = 0.0;     // max relative Cauchy-Riemann defect
  double loop_residual = 0.0;   // max relative plaquette circulation
};

ConjugatePair harmonic_conjugate(std::shared_ptr<const HarmonicSolution> sol,
                                 double x_limit = std::numeric_limits<double>::infinity());

// phi(z) = (1/pi)(log |G| + i arg G), the strip coordinate of the half-plane
// model; Im phi lies in (-1/2, 1/2).
std::complex<double> strip_coordinate(const ConjugatePair& pair,
                                      std::complex<double> z);

struct GrowthPoint {
  double t = 0.0;
  double log_max_u = 0.0;  // log of the full cross-section max of Re G
};

struct GrowthProfile {
  std::vector<GrowthPoint> points;
  bool fitted = false;
  double slope = 0.0;      // least-squares slope of log_max_u against t
  double max_rel_dev = 0.0;  // max |fit - data| / (data range)
};

GrowthProfile growth_profile(const HarmonicSolution& sol,
                             const TractGeometry& tract,
                             const std::vector<double>& t_grid,
                             bool fit_slope = true);

// Adapter exposing the solved tract as a FunctionModel: |f(e^w)| modeled as
// e^{Re G(w)} on the tract and capped by e^{-1} off it.
std::shared_ptr<const TractModelData> make_tract_model_data(
    std::shared_ptr<const HarmonicSolution> sol,
    std::shared_ptr<const TractGeometry> tract);

}  // namespace maxmod
