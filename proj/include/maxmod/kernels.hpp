#pragma once

#include <string>

namespace maxmod::kernels {

// One row of a colored over-relaxation half-sweep:
//   v[i] += a[i] * (cw[i] v[i-1] + ce[i] v[i+1] + cs[i] vS[i] + cn[i] vN[i]
//                   - cp[i] v[i])
// for i in [i0, i1).  a carries omega/cp on nodes of the active color and 0
// elsewhere, so the loop body is branch-free and the in-row reads only ever
// see values of the opposite color.
using SorRowFn = void (*)(double* v, const double* vS, const double* vN,
                          const double* cw, const double* ce, const double* cs,
                          const double* cn, const double* cp, const double* a,
                          int i0, int i1);

// Max scaled residual over the interior nodes of one row (cp > 0 marks
// interior): |stencil| / (sum of term magnitudes).
using ResidRowFn = double (*)(const double* v, const double* vS, const double* vN,
                              const double* cw, const double* ce, const double* cs,
                              const double* cn, const double* cp, int i0, int i1);

struct Backend {
  const char* name;
  SorRowFn sor_row;
  ResidRowFn resid_row;
};

const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr when unsupported on this host

// Active backend: AVX2 when the CPU supports it, else scalar; the
// MAXMOD_BACKEND environment variable ("scalar" / "avx2") overrides.
const Backend& active_backend();
void set_backend(const std::string& name);

}  // namespace maxmod::kernels
