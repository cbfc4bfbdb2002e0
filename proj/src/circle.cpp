#include "maxmod/circle.hpp"

#include <algorithm>
#include <cmath>

namespace maxmod {

double log_modulus_at(const FunctionModel& model, double r, double theta) {
  std::complex<double> z{r * std::cos(theta), r * std::sin(theta)};
  return eval_log(model, z).log_modulus;
}

std::pair<double, double> refine_angle_max(const FunctionModel& model, double r,
                                           double lo, double hi, double angle_tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = log_modulus_at(model, r, c);
  double fd = log_modulus_at(model, r, d);
  while (b - a > angle_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = log_modulus_at(model, r, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = log_modulus_at(model, r, d);
    }
  }
  double t = 0.5 * (a + b);
  return {t, log_modulus_at(model, r, t)};
}

CirclePeaks circle_peaks(const FunctionModel& model, double r, int samples,
                         double refine_tol) {
  if (!(r > 0)) throw EvalError("circle_peaks: r must be > 0");
  if (samples < 256) throw EvalError("circle_peaks: samples must be >= 256");

  std::vector<double> v(samples);
  double step = 2.0 * kPi / samples;
  double vmax = -std::numeric_limits<double>::infinity();
  double vmin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    v[k] = log_modulus_at(model, r, k * step);
    vmax = std::max(vmax, v[k]);
    vmin = std::min(vmin, v[k]);
  }

  CirclePeaks out;
  out.r = r;
  if (vmax - vmin < refine_tol) {
    out.log_M = vmax;
    out.degenerate = true;
    return out;
  }

  for (int k = 0; k < samples; ++k) {
    double prev = v[(k + samples - 1) % samples];
    double next = v[(k + 1) % samples];
    if (v[k] > prev && v[k] >= next) {
      auto [t, val] = refine_angle_max(model, r, (k - 1) * step, (k + 1) * step);
      double tw = t < 0 ? t + 2.0 * kPi : (t >= 2.0 * kPi ? t - 2.0 * kPi : t);
      out.peaks.emplace_back(tw, val);
    }
  }
  if (out.peaks.empty()) {
    int kbest = static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
    out.peaks.emplace_back(kbest * step, v[kbest]);
  }
  std::sort(out.peaks.begin(), out.peaks.end());
  out.log_M = -std::numeric_limits<double>::infinity();
  for (const auto& p : out.peaks) out.log_M = std::max(out.log_M, p.second);
  return out;
}

CircleMax circle_max(const FunctionModel& model, double r, int samples,
                     double refine_tol) {
  CirclePeaks cp = circle_peaks(model, r, samples, refine_tol);
  CircleMax out;
  out.r = r;
  out.log_M = cp.log_M;
  out.degenerate = cp.degenerate;
  if (cp.degenerate) return out;
  for (const auto& p : cp.peaks) {
    if (p.second < cp.log_M - refine_tol) continue;
    if (!out.maximizers.empty() && std::abs(p.first - out.maximizers.back()) < 1e-9) {
      continue;
    }
    out.maximizers.push_back(p.first);
  }
  return out;
}

}  // namespace maxmod
