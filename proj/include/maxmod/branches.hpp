#pragma once

#include <string>
#include <vector>

#include "maxmod/circle.hpp"
#include "maxmod/models.hpp"

namespace maxmod {

struct BranchSample {
  double r = 0.0;
  double theta = 0.0;
  double log_value = 0.0;
  bool is_global = false;
};

// One tracked local maximum across the radius grid.  Radii increase along
// the sample list; consecutive angular gaps stay below the jump tolerance.
struct Branch {
  int id = 0;
  std::vector<BranchSample> samples;
};

struct TraceOptions {
  int samples = 4096;
  double refine_tol = 1e-9;
};

struct TraceResult {
  std::vector<Branch> branches;
  std::vector<std::string> warnings;
  double radial_step = 0.0;
  TraceOptions options;
};

TraceResult trace_branches(const FunctionModel& model, double r_min, double r_max,
                           int steps, double angle_tol,
                           const TraceOptions& opts = {});

struct Discontinuity {
  enum class Kind { Jump, IsolatedPoint };
  double r = 0.0;
  double theta = 0.0;
  int branch_id = -1;
  double left_gap = 0.0;  // log-scale margin at one radial step below r
  Kind kind = Kind::Jump;
};

// A discontinuity is emitted where the global maximizer transfers to a
// branch whose global run begins at that radius; the radius is localized by
// bisection between adjacent grid radii to tolerance tol.
std::vector<Discontinuity> detect_discontinuities(const FunctionModel& model,
                                                  double r_min, double r_max,
                                                  int steps, double tol,
                                                  double angle_tol = 0.1,
                                                  const TraceOptions& opts = {});

// Discontinuities whose branch is globally maximal on a single refined
// radius interval of width below tol on both sides.
std::vector<Discontinuity> isolated_points(const FunctionModel& model,
                                           double r_min, double r_max, int steps,
                                           double tol, double angle_tol = 0.1,
                                           const TraceOptions& opts = {});

struct OrderEstimate {
  bool finite = false;
  double order = 0.0;              // meaningful when finite
  std::vector<double> slopes;      // s(r) = log log M(r) / log r
  std::vector<double> used_r;
  std::vector<double> skipped_r;   // grid points with log M <= 0 or r <= 1
  bool increasing = false;
};

// Reports the final slope as a finite-order estimate when the sequence is
// Cauchy within 0.05 over the last three points; otherwise returns the slope
// sequence itself (an increasing sequence indicates infinite order).
OrderEstimate estimate_order(const FunctionModel& model,
                             const std::vector<double>& r_grid,
                             const TraceOptions& opts = {});

}  // namespace maxmod
