#include <immintrin.h>

#include <cfloat>
#include <cmath>

#include "maxmod/kernels.hpp"

namespace maxmod::kernels {

namespace {

void sor_row_avx2(double* v, const double* vS, const double* vN,
                  const double* cw, const double* ce, const double* cs,
                  const double* cn, const double* cp, const double* a, int i0,
                  int i1) {
  int i = i0;
  for (; i + 4 <= i1; i += 4) {
    __m256d vv = _mm256_loadu_pd(v + i);
    __m256d st = _mm256_mul_pd(_mm256_loadu_pd(cw + i), _mm256_loadu_pd(v + i - 1));
    st = _mm256_fmadd_pd(_mm256_loadu_pd(ce + i), _mm256_loadu_pd(v + i + 1), st);
    st = _mm256_fmadd_pd(_mm256_loadu_pd(cs + i), _mm256_loadu_pd(vS + i), st);
    st = _mm256_fmadd_pd(_mm256_loadu_pd(cn + i), _mm256_loadu_pd(vN + i), st);
    st = _mm256_fnmadd_pd(_mm256_loadu_pd(cp + i), vv, st);
    vv = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), st, vv);
    _mm256_storeu_pd(v + i, vv);
  }
  for (; i < i1; ++i) {
    double st = cw[i] * v[i - 1] + ce[i] * v[i + 1] + cs[i] * vS[i] + cn[i] * vN[i];
    v[i] += a[i] * (st - cp[i] * v[i]);
  }
}

double resid_row_avx2(const double* v, const double* vS, const double* vN,
                      const double* cw, const double* ce, const double* cs,
                      const double* cn, const double* cp, int i0, int i1) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d tiny = _mm256_set1_pd(DBL_MIN);
  __m256d worst = _mm256_setzero_pd();
  int i = i0;
  for (; i + 4 <= i1; i += 4) {
    __m256d tw = _mm256_mul_pd(_mm256_loadu_pd(cw + i), _mm256_loadu_pd(v + i - 1));
    __m256d te = _mm256_mul_pd(_mm256_loadu_pd(ce + i), _mm256_loadu_pd(v + i + 1));
    __m256d ts = _mm256_mul_pd(_mm256_loadu_pd(cs + i), _mm256_loadu_pd(vS + i));
    __m256d tn = _mm256_mul_pd(_mm256_loadu_pd(cn + i), _mm256_loadu_pd(vN + i));
    __m256d td = _mm256_mul_pd(_mm256_loadu_pd(cp + i), _mm256_loadu_pd(v + i));
    __m256d r = _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(tw, te), _mm256_add_pd(ts, tn)), td);
    r = _mm256_andnot_pd(sign_mask, r);
    __m256d sc = _mm256_add_pd(_mm256_andnot_pd(sign_mask, tw),
                               _mm256_andnot_pd(sign_mask, te));
    sc = _mm256_add_pd(sc, _mm256_andnot_pd(sign_mask, ts));
    sc = _mm256_add_pd(sc, _mm256_andnot_pd(sign_mask, tn));
    sc = _mm256_add_pd(sc, _mm256_andnot_pd(sign_mask, td));
    sc = _mm256_add_pd(sc, tiny);
    __m256d rel = _mm256_div_pd(r, sc);
    // Mask out non-interior nodes (cp == 0).
    __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(cp + i), _mm256_setzero_pd(), _CMP_GT_OQ);
    rel = _mm256_and_pd(rel, mask);
    worst = _mm256_max_pd(worst, rel);
  }
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, worst);
  double w = std::fmax(std::fmax(tmp[0], tmp[1]), std::fmax(tmp[2], tmp[3]));
  for (; i < i1; ++i) {
    if (cp[i] <= 0.0) continue;
    double tw = cw[i] * v[i - 1], te = ce[i] * v[i + 1];
    double ts = cs[i] * vS[i], tn = cn[i] * vN[i];
    double td = cp[i] * v[i];
    double r = std::fabs(tw + te + ts + tn - td);
    double scale = std::fabs(tw) + std::fabs(te) + std::fabs(ts) + std::fabs(tn) +
                   std::fabs(td) + DBL_MIN;
    w = std::fmax(w, r / scale);
  }
  return w;
}

}  // namespace

const Backend* avx2_backend() {
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (!ok) return nullptr;
  static const Backend b{"avx2", sor_row_avx2, resid_row_avx2};
  return &b;
}

}  // namespace maxmod::kernels
