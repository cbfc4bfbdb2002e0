#include "maxmod/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace maxmod {

DensityBound density_bounds(const TractGeometry& tract, std::complex<double> z) {
  if (!tract.contains(z)) throw GeometryError("density_bounds: point not in the tract");
  double d = tract.boundary_dist(z);
  return {1.0 / (2.0 * d), 2.0 / d};
}

double hyp_dist_upper(const TractGeometry& tract,
                      const std::vector<std::complex<double>>& path,
                      int samples_per_segment) {
  if (path.size() < 2) return 0.0;
  double total = 0.0;
  for (size_t k = 1; k < path.size(); ++k) {
    std::complex<double> a = path[k - 1], b = path[k];
    double len = std::abs(b - a);
    if (len == 0.0) continue;
    double prev = 2.0 / tract.boundary_dist(a);
    for (int q = 1; q <= samples_per_segment; ++q) {
      std::complex<double> z = a + (b - a) * (static_cast<double>(q) / samples_per_segment);
      double d = tract.boundary_dist(z);
      if (!(d > 0.0)) throw GeometryError("hyp_dist_upper: path touches the boundary");
      double cur = 2.0 / d;
      total += 0.5 * (prev + cur) * (len / samples_per_segment);
      prev = cur;
    }
  }
  return total;
}

double hyp_dist_lower_rect(const TractGeometry& tract, std::complex<double> a,
                           std::complex<double> b, int sector, int index) {
  const TractRect* rect = nullptr;
  for (const auto& r : tract.rects) {
    if (r.sector == sector && r.index == index) rect = &r;
  }
  if (!rect) throw GeometryError("hyp_dist_lower_rect: no such rectangle");
  for (auto z : {a, b}) {
    if (z.real() < rect->x0 || z.real() > rect->x1 || z.imag() < rect->y0 ||
        z.imag() > rect->y1) {
      throw GeometryError("hyp_dist_lower_rect: point outside the stated channel");
    }
  }
  double tau = std::min(rect->x1 - rect->x0, rect->y1 - rect->y0);
  return std::abs(a.real() - b.real()) / tau;
}

namespace {

// acosh(1 + x) without cancellation, valid for huge x.
double acosh1p(double x) {
  if (x < 0) throw GeometryError("acosh1p: negative argument");
  if (x > 1e8) return std::log(2.0 * x) + std::log1p(1.0 / x);
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

}  // namespace

double halfplane_distance(std::complex<double> w1, std::complex<double> w2) {
  if (!(w1.real() > 0 && w2.real() > 0)) {
    throw GeometryError("halfplane_distance: points must have positive real part");
  }
  double q = std::norm(w1 - w2) / (2.0 * w1.real() * w2.real());
  return 0.5 * acosh1p(q);
}

double halfplane_distance_logpolar(double log_mod1, double arg1, double log_mod2,
                                   double arg2) {
  double c1 = std::cos(arg1), c2 = std::cos(arg2);
  if (!(c1 > 0 && c2 > 0)) {
    throw GeometryError("halfplane_distance_logpolar: points must lie in the half-plane");
  }
  // |w1 - w2|^2 / (2 x1 x2) with x = |w| cos(arg), written via the modulus
  // ratio so only log-mod differences are exponentiated.
  double rho = std::exp(log_mod1 - log_mod2);        // |w1| / |w2|
  double num = rho + 1.0 / rho - 2.0 * std::cos(arg1 - arg2);
  double q = num / (2.0 * c1 * c2);
  return 0.5 * acosh1p(q);
}

bool rho_translation_monotone(std::complex<double> w, double x) {
  if (!(w.real() > 0) || !(x > 0)) {
    throw GeometryError("rho_translation_monotone: need Re w > 0 and x > 0");
  }
  return 1.0 / (2.0 * w.real()) > 1.0 / (2.0 * (w.real() + x));
}

namespace {

struct SegmentPhi {
  double min_re, max_re;
};

SegmentPhi phi_range_on_segment(const ConjugatePair& pair, double x, double y0,
                                double y1) {
  const Grid& g = pair.sol->grid;
  std::vector<double> ys;
  double inset = 1e-3 * (y1 - y0);
  for (double y : g.ys) {
    if (y > y0 + inset && y < y1 - inset) ys.push_back(y);
  }
  ys.push_back(y0 + inset);
  ys.push_back(y1 - inset);
  std::sort(ys.begin(), ys.end());
  SegmentPhi out{std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
  for (size_t k = 0; k + 1 < ys.size(); ++k) {
    for (int q = 0; q < 2; ++q) {
      double y = ys[k] + (ys[k + 1] - ys[k]) * (q + 0.5) / 2.0;
      double re = strip_coordinate(pair, {x, y}).real();
      out.min_re = std::min(out.min_re, re);
      out.max_re = std::max(out.max_re, re);
    }
  }
  return out;
}

AhlforsCheck finish_check(double lhs, double integral, double slack) {
  AhlforsCheck c;
  c.integral = integral;
  c.applicable = integral >= 0.5;
  c.lhs = lhs;
  c.rhs = integral - std::log(32.0) / kPi;
  c.pass = c.applicable && lhs >= c.rhs - slack * std::max(1.0, std::abs(c.rhs));
  return c;
}

}  // namespace

AhlforsCheck verify_ahlfors(const ConjugatePair& pair, const TractGeometry& tract,
                            double t, double t_prime, double slack) {
  if (!(t < t_prime)) throw GeometryError("verify_ahlfors: need t < t'");

  auto separating_channel = [&](double s) -> Channel {
    for (const auto& c : tract.channels_at(s)) {
      if (c.separating) return c;
    }
    throw GeometryError("verify_ahlfors: no separating channel at the given abscissa");
  };
  Channel near = separating_channel(t);
  Channel far = separating_channel(t_prime);

  // Exact integral of ds/theta over the piecewise-constant pieces.
  std::set<double> cuts{t, t_prime};
  for (const auto& r : tract.rects) {
    for (double e : {r.x0, r.x1}) {
      if (e > t && e < t_prime) cuts.insert(e);
    }
  }
  double integral = 0.0;
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
    double a = *it, b = *std::next(it);
    integral += (b - a) / tract.cross_section_theta(0.5 * (a + b));
  }

  SegmentPhi pn = phi_range_on_segment(pair, t, near.y0, near.y1);
  SegmentPhi pf = phi_range_on_segment(pair, t_prime, far.y0, far.y1);
  return finish_check(pf.min_re - pn.max_re, integral, slack);
}

AhlforsCheck verify_ahlfors_box(const ConjugatePair& pair, double y0, double y1,
                                double t, double t_prime, double slack) {
  if (!(t < t_prime)) throw GeometryError("verify_ahlfors_box: need t < t'");
  double integral = (t_prime - t) / (y1 - y0);
  SegmentPhi pn = phi_range_on_segment(pair, t, y0, y1);
  SegmentPhi pf = phi_range_on_segment(pair, t_prime, y0, y1);
  return finish_check(pf.min_re - pn.max_re, integral, slack);
}

}  // namespace maxmod
