#include "maxmod/kernels.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace maxmod::kernels {

namespace {

void sor_row_scalar(double* v, const double* vS, const double* vN,
                    const double* cw, const double* ce, const double* cs,
                    const double* cn, const double* cp, const double* a, int i0,
                    int i1) {
  for (int i = i0; i < i1; ++i) {
    double st = cw[i] * v[i - 1] + ce[i] * v[i + 1] + cs[i] * vS[i] + cn[i] * vN[i];
    v[i] += a[i] * (st - cp[i] * v[i]);
  }
}

double resid_row_scalar(const double* v, const double* vS, const double* vN,
                        const double* cw, const double* ce, const double* cs,
                        const double* cn, const double* cp, int i0, int i1) {
  double worst = 0.0;
  for (int i = i0; i < i1; ++i) {
    if (cp[i] <= 0.0) continue;
    double tw = cw[i] * v[i - 1], te = ce[i] * v[i + 1];
    double ts = cs[i] * vS[i], tn = cn[i] * vN[i];
    double td = cp[i] * v[i];
    double r = std::fabs(tw + te + ts + tn - td);
    double scale = std::fabs(tw) + std::fabs(te) + std::fabs(ts) + std::fabs(tn) +
                   std::fabs(td) + DBL_MIN;
    double rel = r / scale;
    if (rel > worst) worst = rel;
  }
  return worst;
}

const Backend* g_active = nullptr;

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar", sor_row_scalar, resid_row_scalar};
  return b;
}

#if !defined(MAXMOD_WITH_AVX2)
const Backend* avx2_backend() { return nullptr; }
#endif

void set_backend(const std::string& name) {
  if (name == "scalar") {
    g_active = &scalar_backend();
  } else if (name == "avx2") {
    const Backend* b = avx2_backend();
    if (!b) throw std::runtime_error("kernels: avx2 backend unavailable on this host");
    g_active = b;
  } else if (name == "auto" || name.empty()) {
    g_active = avx2_backend() ? avx2_backend() : &scalar_backend();
  } else {
    throw std::runtime_error("kernels: unknown backend '" + name + "'");
  }
}

const Backend& active_backend() {
  if (!g_active) {
    const char* env = std::getenv("MAXMOD_BACKEND");
    set_backend(env ? env : "auto");
  }
  return *g_active;
}

}  // namespace maxmod::kernels
