#pragma once

#include <complex>
#include <vector>

#include "maxmod/conformal.hpp"
#include "maxmod/tract.hpp"

namespace maxmod {

// Two-sided estimate of the hyperbolic density from the boundary distance,
// under the curvature -4 convention (half-plane density 1/(2x)).
struct DensityBound {
  double lower = 0.0;  // 1 / (2 dist)
  double upper = 0.0;  // 2 / dist
};

DensityBound density_bounds(const TractGeometry& tract, std::complex<double> z);

// Trapezoid integral of 2/dist along a polyline staying inside the tract.
double hyp_dist_upper(const TractGeometry& tract,
                      const std::vector<std::complex<double>>& path,
                      int samples_per_segment = 256);

// Channel lower bound |Re a - Re b| / tau for two points of a common thin
// rectangle of the tract (tau = its thickness).
double hyp_dist_lower_rect(const TractGeometry& tract, std::complex<double> a,
                           std::complex<double> b, int sector, int index);

// Closed-form hyperbolic distance in the right half-plane, curvature -4.
double halfplane_distance(std::complex<double> w1, std::complex<double> w2);

// Same, with the points given as (log modulus, argument); usable at the
// astronomic magnitudes the solved tracts produce.
double halfplane_distance_logpolar(double log_mod1, double arg1, double log_mod2,
                                   double arg2);

// Executable witness of strict density decay under rightward translation.
bool rho_translation_monotone(std::complex<double> w, double x);

struct AhlforsCheck {
  bool applicable = false;  // integral of ds/theta reached 1/2
  double lhs = 0.0;         // min Re phi on the far segment - max on the near
  double rhs = 0.0;         // integral - (1/pi) log 32
  double integral = 0.0;
  bool pass = false;
};

// Distortion check between the separating vertical segments at t and t',
// with theta(s) integrated exactly over its piecewise-constant pieces.
AhlforsCheck verify_ahlfors(const ConjugatePair& pair, const TractGeometry& tract,
                            double t, double t_prime, double slack = 0.05);

// Variant for a plain box of constant cross-section (solver oracles).
AhlforsCheck verify_ahlfors_box(const ConjugatePair& pair, double y0, double y1,
                                double t, double t_prime, double slack = 0.05);

}  // namespace maxmod
