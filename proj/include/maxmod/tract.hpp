#pragma once

#include <complex>
#include <string>
#include <vector>

#include "maxmod/radii.hpp"

namespace maxmod {

// Axis-aligned open rectangle of the tract; sector 0 index 0 is the anchor
// box, sectors 1..N carry indices 1..6, sector N+1 index 1 is the stub that
// runs to the truncation cap.
struct TractRect {
  int sector = 0;
  int index = 0;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

// Degenerate (zero-thickness) boundary segment, axis-aligned.
struct BoundarySeg {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

// One maximal vertical interval of the tract at a fixed real part.
struct Channel {
  double y0 = 0, y1 = 0;
  bool separating = false;  // cutting it alone disconnects left end from cap
};

class TractGeometry {
 public:
  LogSpec spec;
  std::vector<double> delta;
  double ell = 0.125;
  int sectors = 0;
  double x_cap = 0;
  std::vector<TractRect> rects;
  std::vector<BoundarySeg> boundary;  // excludes the truncation cap

  // Per-sector abscissas, i in [0, sectors).
  double xn(int i) const { return spec.x[i]; }
  double eps(int i) const { return spec.eps[i]; }
  double w3(int i) const { return spec.eps[i] / 32.0; }
  double xL4(int i) const { return spec.x[i] - delta[i]; }
  double xR4(int i) const { return xL4(i) + spec.eps[i] / 8.0; }
  double xR3(int i) const { return spec.x[i] + spec.eps[i] / 2.0; }
  double xR2(int i) const { return spec.x[i] + spec.eps[i]; }
  double xR6(int i) const { return spec.x[i] + 1.5 * spec.eps[i]; }
  double xL1(int i) const {
    return i == 0 ? 0.0 : spec.x[i - 1] + 1.5 * spec.eps[i - 1];
  }

  // Exact open-set membership (the truncation cap line is not interior).
  bool contains(std::complex<double> z) const;

  // Exact Euclidean distance to the tract boundary (cap excluded).
  double boundary_dist(std::complex<double> z) const;

  // Maximal vertical intervals of the cross-section at real part s, with the
  // chain-separation flag resolved per channel.  s must not sit exactly on a
  // rectangle edge; callers integrating over s sample strictly inside edges.
  std::vector<Channel> channels_at(double s) const;

  // Length of the vertical separating segment used at real part s: single
  // channel -> its height; two channels -> the conservative full span;
  // three or more -> the shortest individually-separating channel.
  double cross_section_theta(double s) const;

  // One rectangle per line: sector index x0 x1 y0 y1.
  std::string serialize() const;

  double x_min() const { return -2.0; }
};

TractGeometry build_tract(const LogSpec& spec, const std::vector<double>& delta,
                          double ell, int sector_count);

struct ClearanceCurve {
  std::vector<std::complex<double>> vertices;
  double alpha = 0.0;           // guaranteed clearance from the boundary
  double length_bound_K = 0.0;  // cumulative length up to x <= t is <= K t
};

// Axis-parallel polyline from the normalization point through the anchor
// gate and every winding, with clearance alpha = min(eps_min/64, ell/2).
ClearanceCurve clearance_curve(const TractGeometry& tract);

}  // namespace maxmod
