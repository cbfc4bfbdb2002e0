#include <cmath>
#include <vector>

#include "doctest.h"
#include "maxmod/kernels.hpp"
#include "oracles.hpp"

using namespace maxmod;
using namespace maxmod::testing;

namespace {
struct Lcg {
  uint64_t s = 12345;
  double next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(s >> 11) / 9007199254740992.0;
  }
};
}  // namespace

TEST_CASE("scalar and simd rows agree elementwise") {
  const kernels::Backend* simd = kernels::avx2_backend();
  if (!simd) return;  // host without the instruction set
  const kernels::Backend& ref = kernels::scalar_backend();

  Lcg rng;
  const int n = 259;  // odd length exercises the vector tail
  std::vector<double> v0(n), vS(n), vN(n), cw(n), ce(n), cs(n), cn(n), cp(n), a(n);
  for (int i = 0; i < n; ++i) {
    v0[i] = rng.next() * 2.0 - 1.0;
    vS[i] = rng.next();
    vN[i] = rng.next();
    cw[i] = rng.next();
    ce[i] = rng.next();
    cs[i] = rng.next();
    cn[i] = rng.next();
    cp[i] = 1.0 + rng.next();
    a[i] = (i % 2 == 0) ? 1.5 / cp[i] : 0.0;
  }
  std::vector<double> va = v0, vb = v0;
  ref.sor_row(va.data(), vS.data(), vN.data(), cw.data(), ce.data(), cs.data(),
              cn.data(), cp.data(), a.data(), 1, n - 1);
  simd->sor_row(vb.data(), vS.data(), vN.data(), cw.data(), ce.data(), cs.data(),
                cn.data(), cp.data(), a.data(), 1, n - 1);
  for (int i = 0; i < n; ++i) {
    CHECK(std::abs(va[i] - vb[i]) <= 1e-13 * (std::abs(va[i]) + 1.0));
  }

  double ra = ref.resid_row(va.data(), vS.data(), vN.data(), cw.data(), ce.data(),
                            cs.data(), cn.data(), cp.data(), 1, n - 1);
  double rb = simd->resid_row(va.data(), vS.data(), vN.data(), cw.data(), ce.data(),
                              cs.data(), cn.data(), cp.data(), 1, n - 1);
  CHECK(ra == doctest::Approx(rb).epsilon(1e-12));
}

TEST_CASE("backends converge to the same solution") {
  const kernels::Backend* simd = kernels::avx2_backend();
  if (!simd) return;
  kernels::set_backend("scalar");
  HarmonicSolution a = solve_halfstrip(1.0 / 32.0, true);
  kernels::set_backend("avx2");
  HarmonicSolution b = solve_halfstrip(1.0 / 32.0, true);
  kernels::set_backend("auto");
  for (double x : {1.0, 3.0, 5.0}) {
    CHECK(a.log_u_interp({x, 0.25}) ==
          doctest::Approx(b.log_u_interp({x, 0.25})).epsilon(1e-9));
  }
}

TEST_CASE("unknown backend name is rejected") {
  CHECK_THROWS(kernels::set_backend("sse42"));
  kernels::set_backend("auto");
}
