#include "maxmod/polya.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace maxmod {

double dist_to_strip_boundary(std::complex<double> z) {
  double x = z.real(), y = z.imag();
  // Left edge {0} x [-pi, pi].
  double d_left = std::hypot(x, std::max(0.0, std::abs(y) - kPi));
  // Horizontal rays y = +-pi, x >= 0.
  double d_top = std::hypot(std::max(0.0, -x), y - kPi);
  double d_bot = std::hypot(std::max(0.0, -x), y + kPi);
  return std::min({d_left, d_top, d_bot});
}

bool inside_strip_g0(std::complex<double> z) {
  return z.real() > 0.0 && std::abs(z.imag()) < kPi;
}

namespace {

// One contour node: premultiplied term  w_k * exp(e^{t_k}) * t'  stored in
// log scale, plus the node location.
struct Node {
  std::complex<double> t;
  LogComplex term;
};

struct Contour {
  std::vector<Node> nodes;
  // Edge endpoint data for the Euler-Maclaurin corrections: (t, t', h).
  struct EdgeEnd {
    std::complex<double> t;
    std::complex<double> tprime;
    double h;
    double sign;  // +1 at the ascending end, -1 at the start
  };
  std::vector<EdgeEnd> ends;
};

LogComplex exp_of_exp(std::complex<double> t) {
  // exp(e^t) in log scale: log-modulus Re(e^t), argument Im(e^t).
  if (t.real() > 700.0) throw EvalError("polya: exponent overflow");
  double m = std::exp(t.real());
  double re = m * std::cos(t.imag());
  double im = m * std::sin(t.imag());
  return LogComplex::from_log_polar(re, wrap_angle(im));
}

const Contour& contour_for(const QuadratureParams& q) {
  static std::map<std::pair<double, int>, Contour> cache;
  auto key = std::make_pair(q.truncation_x, q.nodes_per_unit);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Contour c;
  auto add_edge = [&](std::complex<double> t0, std::complex<double> t1, double len) {
    int n = static_cast<int>(std::ceil(len * q.nodes_per_unit)) + 1;
    double h = len / (n - 1);
    std::complex<double> tprime = (t1 - t0) / len;
    for (int k = 0; k < n; ++k) {
      double s = k * h;
      std::complex<double> t = t0 + tprime * s;
      double w = (k == 0 || k == n - 1) ? 0.5 * h : h;
      Node nd;
      nd.t = t;
      nd.term = scale(exp_of_exp(t), w) * LogComplex::from_complex(tprime);
      c.nodes.push_back(nd);
    }
    c.ends.push_back({t0, tprime, h, -1.0});
    c.ends.push_back({t1, tprime, h, +1.0});
  };

  double T = q.truncation_x;
  // Top edge right-to-left, left edge downward, bottom edge left-to-right.
  add_edge({T, kPi}, {0.0, kPi}, T);
  add_edge({0.0, kPi}, {0.0, -kPi}, 2.0 * kPi);
  add_edge({0.0, -kPi}, {T, -kPi}, T);
  return cache.emplace(key, std::move(c)).first->second;
}

// d/dt [ exp(e^t) / (t - z) ], needed for the endpoint corrections.  All
// corner values are O(1), so plain complex arithmetic is safe here.
std::complex<double> integrand_dt(std::complex<double> t, std::complex<double> z) {
  std::complex<double> et = std::exp(t);
  std::complex<double> F = std::exp(et);
  std::complex<double> d = t - z;
  return F * (et / d - 1.0 / (d * d));
}

LogComplex cauchy_integral(std::complex<double> z, const QuadratureParams& q,
                           bool corrected) {
  double dist = dist_to_strip_boundary(z);
  if (dist < q.min_contour_distance) {
    throw EvalError("polya: evaluation point too close to the contour");
  }
  const Contour& c = contour_for(q);
  LogComplex sum = LogComplex::zero();
  for (const Node& nd : c.nodes) {
    sum = sum + nd.term / LogComplex::from_complex(nd.t - z);
  }
  if (corrected) {
    // integral = trapezoid - (h^2/12) * (F'(b) - F'(a)) per edge, where
    // F(s) = f(t(s)) t' and s is the ascending edge parameter.
    std::complex<double> corr{0.0, 0.0};
    for (const auto& e : c.ends) {
      std::complex<double> Fp = e.tprime * e.tprime * integrand_dt(e.t, z);
      corr -= (e.h * e.h / 12.0) * e.sign * Fp;
    }
    sum = sum + LogComplex::from_complex(corr);
  }
  // Divide by 2 pi i.
  return sum / LogComplex::from_log_polar(std::log(2.0 * kPi), 0.5 * kPi);
}

}  // namespace

LogComplex polya_g(std::complex<double> z, const QuadratureParams& quad) {
  quad.validate();
  LogComplex g = cauchy_integral(z, quad, true);
  if (inside_strip_g0(z)) {
    std::complex<double> ez = std::exp(z);
    g = g + LogComplex::from_log_polar(ez.real(), wrap_angle(ez.imag()));
  }
  return g;
}

LogComplex polya_g_plain(std::complex<double> z, const QuadratureParams& quad) {
  quad.validate();
  LogComplex g = cauchy_integral(z, quad, false);
  if (inside_strip_g0(z)) {
    std::complex<double> ez = std::exp(z);
    g = g + LogComplex::from_log_polar(ez.real(), wrap_angle(ez.imag()));
  }
  return g;
}

LogComplex polya_sum(std::complex<double> z, const PolyaSum& model) {
  PolyaSumResolved r = resolve_polya_sum(model);
  // Contour-distance precondition holds per translated copy, measured in the
  // copy's own coordinates w = a_n (z - b_n).
  for (int n = 0; n < model.terms; ++n) {
    std::complex<double> w = r.a[n] * (z - r.b[n]);
    if (dist_to_strip_boundary(w) < model.quad.min_contour_distance) {
      throw EvalError("polya_sum: point too close to a translated contour");
    }
  }
  constexpr double kDropNats = 40.0;
  LogComplex sum = LogComplex::zero();
  double best = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < model.terms; ++n) {
    std::complex<double> w = r.a[n] * (z - r.b[n]);
    // Cheap overestimate of log |g(w)|: interior dominant term exp(e^w),
    // exterior decay ~ 1/|w|.
    double ub = inside_strip_g0(w)
                    ? std::exp(w.real()) + 1.0
                    : std::log(2.0 / std::max(std::abs(w), 0.5)) + 1.0;
    if (ub < best - kDropNats) continue;
    LogComplex term = polya_g(w, model.quad);
    if (!term.is_zero && term.log_modulus < best - kDropNats) continue;
    sum = sum + term;
    if (!term.is_zero) best = std::max(best, term.log_modulus);
  }
  return sum;
}

int polya_strip_index(std::complex<double> z, const PolyaSum& model) {
  PolyaSumResolved r = resolve_polya_sum(model);
  for (int n = 0; n < model.terms; ++n) {
    if (inside_strip_g0(r.a[n] * (z - r.b[n]))) return n;
  }
  return -1;
}

}  // namespace maxmod
