#pragma once

#include <complex>
#include <vector>

#include "maxmod/logcomplex.hpp"
#include "maxmod/models.hpp"

namespace maxmod {

// Distance from z to the boundary of the half-strip G0 = {x > 0, |y| < pi}.
double dist_to_strip_boundary(std::complex<double> z);

bool inside_strip_g0(std::complex<double> z);

// g(z) = (1/2 pi i) * contour integral of exp(e^t) / (t - z) along the
// truncated boundary of G0, traversed top edge right-to-left, left edge
// downward, bottom edge left-to-right; plus the jump term exp(e^z) when z
// lies inside G0.  Composite trapezoid with corner nodes and Euler-Maclaurin
// endpoint corrections at the corners (the corrections are what push the
// node-doubling self-consistency below 1e-8).
LogComplex polya_g(std::complex<double> z, const QuadratureParams& quad);

// Plain trapezoid variant without endpoint corrections; used as an
// independent cross-check (Richardson extrapolation over node counts).
LogComplex polya_g_plain(std::complex<double> z, const QuadratureParams& quad);

// Sum of g(a_n (z - b_n)) over the resolved sequences.  Terms whose cheap
// upper bound falls 40 nats below the running maximum are dropped.
LogComplex polya_sum(std::complex<double> z, const PolyaSum& model);

// Index of the strip G_n = {a_n (z - b_n) in G0} containing z, or -1.
int polya_strip_index(std::complex<double> z, const PolyaSum& model);

}  // namespace maxmod
