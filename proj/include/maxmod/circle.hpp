#pragma once

#include <vector>

#include "maxmod/models.hpp"

namespace maxmod {

// Maximizers of log |f| on the circle of radius r.
struct CircleMax {
  double r = 0.0;
  std::vector<double> maximizers;  // angles in [0, 2 pi), sorted
  double log_M = 0.0;
  bool degenerate = false;  // all angles maximize (range below tolerance)
};

// All refined local maxima of theta -> log |f(r e^{i theta})| on one circle.
struct CirclePeaks {
  double r = 0.0;
  std::vector<std::pair<double, double>> peaks;  // (theta, log value), sorted
  double log_M = 0.0;
  bool degenerate = false;
};

CirclePeaks circle_peaks(const FunctionModel& model, double r, int samples = 4096,
                         double refine_tol = 1e-9);

// Dense uniform sampling in theta followed by golden-section refinement of
// each local maximum; all local maxima within refine_tol (log scale) of the
// best are reported.
CircleMax circle_max(const FunctionModel& model, double r, int samples = 4096,
                     double refine_tol = 1e-9);

// Refine a single local maximum of theta -> log |f(r e^{i theta})| inside
// [lo, hi]; returns (theta, value).
std::pair<double, double> refine_angle_max(const FunctionModel& model, double r,
                                           double lo, double hi,
                                           double angle_tol = 1e-12);

double log_modulus_at(const FunctionModel& model, double r, double theta);

}  // namespace maxmod
