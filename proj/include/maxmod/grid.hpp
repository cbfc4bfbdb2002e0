#pragma once

#include <cstdint>
#include <vector>

#include "maxmod/tract.hpp"

namespace maxmod {

// Node states on the tensor-product grid.
enum : uint8_t { kOutside = 0, kInterior = 1, kCap = 3 };

// Tensor-product grid over a tract (or a plain box).  Every rectangle edge
// and every zero-thickness wall lies exactly on a grid line, so the five
// point stencil never couples nodes across a wall.
struct Grid {
  std::vector<double> xs, ys;
  int nx = 0, ny = 0;
  std::vector<uint8_t> state;
  int cap_col = -1;

  size_t at(int i, int j) const { return static_cast<size_t>(j) * nx + i; }
  bool interior(int i, int j) const { return state[at(i, j)] == kInterior; }
  size_t count_interior() const;

  // Cell index with xs[i] <= x < xs[i+1] (clamped).
  int cell_x(double x) const;
  int cell_y(double y) const;
};

// Graded grid for a winding tract.  h is the fine spacing used along the
// thin back channels; coarser fills scale proportionally so that halving h
// refines the whole grid.
Grid build_tract_grid(const TractGeometry& tract, double h);

// Uniform grid on a box with a Dirichlet cap on the right edge; used by the
// solver oracles.
Grid build_box_grid(double x0, double x1, double y0, double y1, double h);

// Raster connectivity of the tract: the interior is one connected component
// and its complement has no bounded component.  Throws on failure.
void validate_tract_raster(const TractGeometry& tract);

}  // namespace maxmod
