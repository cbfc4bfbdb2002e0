#include "maxmod/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace maxmod {

double trust_x_max(const TractGeometry& tract) {
  int i = std::max(0, tract.sectors - 2);
  return tract.spec.x[i] + 2.0 * tract.spec.eps[i];
}

double max_log_reG_on_segment(const HarmonicSolution& sol, double x, double y0,
                              double y1, int subsamples) {
  return sol.max_log_u_on_segment(x, y0, y1, subsamples);
}

double max_reG_on_segment(const HarmonicSolution& sol, double x, double y0,
                          double y1, int subsamples) {
  double lm = max_log_reG_on_segment(sol, x, y0, y1, subsamples);
  if (lm > 700.0) throw SolverError("max_reG_on_segment: value exceeds double range");
  return std::exp(lm);
}

EllResult verify_ell(const LogSpec& spec, int sectors,
                     std::pair<double, double> ell_range, double grid_h,
                     const SolverOptions& opts) {
  double eps_min = *std::min_element(spec.eps.begin(), spec.eps.begin() + sectors);
  double h = grid_h > 0 ? grid_h : eps_min / 48.0;
  const double target = std::log(4.0 * 1.1);  // 10% margin over Re G = 4

  EllResult out;
  auto gate_value = [&](double ell, bool delta_high) {
    std::vector<double> delta(sectors, 0.0);
    if (delta_high) {
      for (int i = 0; i < sectors; ++i) delta[i] = spec.eps[i] / 8.0;
    }
    TractGeometry t = build_tract(spec, delta, ell, sectors);
    HarmonicSolution sol = solve_reG(t, h, CapCondition::tent(), opts);
    int col = sol.column_index(0.0);
    if (col < 0) throw SolverError("verify_ell: gate column missing");
    return sol.max_log_u_on_column(col, 0.0, ell);
  };
  auto passes = [&](double ell) {
    double g0 = gate_value(ell, false);
    double g1 = gate_value(ell, true);
    out.tried.emplace_back(ell, std::min(g0, g1));
    return std::min(g0, g1) >= target;
  };

  auto [lo, hi] = ell_range;
  if (!(0 < lo && lo < hi && hi < 1)) {
    throw GeometryError("verify_ell: need 0 < lo < hi < 1");
  }
  if (passes(hi)) {
    out.ell = hi;
    out.gate_max_log_u = out.tried.back().second;
    return out;
  }
  if (!passes(lo)) {
    throw SolverError("verify_ell: no passing half-height in the given range");
  }
  double best = lo;
  for (int it = 0; it < 12 && hi - lo > 1e-3 * lo; ++it) {
    double mid = 0.5 * (lo + hi);
    if (passes(mid)) {
      best = mid;
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.ell = best;
  // Recorded gate value at the returned ell (delta = 0 run).
  out.gate_max_log_u = gate_value(best, false);
  return out;
}

GapResult verify_gap(const HarmonicSolution& sol, const TractGeometry& tract,
                     int sector) {
  if (sector < 0 || sector >= tract.sectors) {
    throw GeometryError("verify_gap: sector out of range");
  }
  double xl = tract.xL4(sector), xr = tract.xR4(sector);
  GapResult out;
  for (int i = 0; i < sol.grid.nx; ++i) {
    double x = sol.grid.xs[i];
    if (x <= xl || x >= xr) continue;
    GapProfilePoint p;
    p.t = x;
    p.run_log = sol.max_log_u_on_column(i, 0.0, 1.0);
    p.shaft_log = sol.max_log_u_on_column(i, -1.0, 0.0);
    out.profile.push_back(p);
  }
  if (out.profile.empty()) throw GeometryError("verify_gap: no grid columns in I_n");

  // Gap requirement at t': e^{m4} > e^{m1} + 1.
  auto holds = [](const GapProfilePoint& p) {
    return p.shaft_log > log_sum_exp(p.run_log, 0.0);
  };
  int first_ok = -1;
  for (int k = static_cast<int>(out.profile.size()) - 1; k >= 0; --k) {
    if (holds(out.profile[k])) {
      first_ok = k;
    } else {
      break;
    }
  }
  if (first_ok < 0) return out;  // margin profile reported, not found
  out.found = true;
  out.t = out.profile[first_ok].t;
  out.min_margin = std::numeric_limits<double>::infinity();
  for (size_t k = first_ok; k < out.profile.size(); ++k) {
    double m = log_diff_exp(out.profile[k].shaft_log, out.profile[k].run_log);
    out.min_margin = std::min(out.min_margin, m);
  }
  return out;
}

ConjugatePair harmonic_conjugate(std::shared_ptr<const HarmonicSolution> solp,
                                 double x_limit) {
  const HarmonicSolution& sol = *solp;
  const Grid& g = sol.grid;
  const int nx = g.nx, ny = g.ny;

  ConjugatePair pair;
  pair.sol = solp;
  pair.w.assign(sol.v.size(), 0.0);

  // Scaled value of u at a node relative to the frame of node `ref`.
  auto uval = [&](int i, int j, size_t ref) {
    size_t id = g.at(i, j);
    return sol.v[id] * std::exp(sol.gauge[id] - sol.gauge[ref]);
  };
  // Nonuniform central derivative of u in x or y at (i, j), frame of (i, j).
  auto du = [&](int i, int j, bool in_x) {
    size_t ref = g.at(i, j);
    double hm, hp, fm, fp, f0 = sol.v[ref];
    if (in_x) {
      hm = g.xs[i] - g.xs[i - 1];
      hp = g.xs[i + 1] - g.xs[i];
      fm = uval(i - 1, j, ref);
      fp = uval(i + 1, j, ref);
    } else {
      hm = g.ys[j] - g.ys[j - 1];
      hp = g.ys[j + 1] - g.ys[j];
      fm = uval(i, j - 1, ref);
      fp = uval(i, j + 1, ref);
    }
    return (hm * hm * fp - hp * hp * fm + (hp * hp - hm * hm) * f0) /
           (hm * hp * (hm + hp));
  };

  int i0 = sol.column_index(sol.z0.real());
  auto jline = [&](double y) {
    for (int j = 0; j < ny; ++j) {
      if (std::abs(g.ys[j] - y) <= 1e-12) return j;
    }
    return -1;
  };
  int j0 = jline(sol.z0.imag());
  if (i0 < 0 || j0 < 0) throw SolverError("harmonic_conjugate: z0 off-grid");

  std::vector<uint8_t> seen(sol.v.size(), 0);
  std::deque<std::pair<int, int>> q{{i0, j0}};
  seen[g.at(i0, j0)] = 1;
  pair.w[g.at(i0, j0)] = 0.0;
  while (!q.empty()) {
    auto [i, j] = q.front();
    q.pop_front();
    size_t id = g.at(i, j);
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int a = i + di[k], b = j + dj[k];
      if (a < 1 || a >= nx - 1 || b < 1 || b >= ny - 1) continue;
      size_t nid = g.at(a, b);
      if (seen[nid] || g.state[nid] != kInterior) continue;
      if (g.xs[a] > x_limit) continue;
      // dIm = -u_y dx + u_x dy, trapezoid on the grid edge, frame of (i, j).
      double delta;
      if (k < 2) {
        double dx = g.xs[a] - g.xs[i];
        double m0 = du(i, j, false);
        double m1 = du(a, b, false) * std::exp(sol.gauge[nid] - sol.gauge[id]);
        delta = -0.5 * (m0 + m1) * dx;
      } else {
        double dy = g.ys[b] - g.ys[j];
        double m0 = du(i, j, true);
        double m1 = du(a, b, true) * std::exp(sol.gauge[nid] - sol.gauge[id]);
        delta = 0.5 * (m0 + m1) * dy;
      }
      pair.w[nid] = (pair.w[id] + delta) * std::exp(sol.gauge[id] - sol.gauge[nid]);
      seen[nid] = 1;
      q.emplace_back(a, b);
    }
  }

  // Cauchy-Riemann defect and plaquette circulation, both relative to the
  // local derivative scale.
  auto dw = [&](int i, int j, bool in_x) {
    size_t ref = g.at(i, j);
    auto wv = [&](int a, int b) {
      size_t id = g.at(a, b);
      return pair.w[id] * std::exp(sol.gauge[id] - sol.gauge[ref]);
    };
    double hm, hp, fm, fp, f0 = pair.w[ref];
    if (in_x) {
      hm = g.xs[i] - g.xs[i - 1];
      hp = g.xs[i + 1] - g.xs[i];
      fm = wv(i - 1, j);
      fp = wv(i + 1, j);
    } else {
      hm = g.ys[j] - g.ys[j - 1];
      hp = g.ys[j + 1] - g.ys[j];
      fm = wv(i, j - 1);
      fp = wv(i, j + 1);
    }
    return (hm * hm * fp - hp * hp * fm + (hp * hp - hm * hm) * f0) /
           (hm * hp * (hm + hp));
  };
  double worst = 0.0;
  for (int j = 2; j < ny - 2; ++j) {
    for (int i = 2; i < nx - 2; ++i) {
      if (g.state[g.at(i, j)] != kInterior || g.xs[i] > x_limit) continue;
      bool inner = true;
      for (int k = -1; k <= 1 && inner; ++k) {
        for (int m = -1; m <= 1; ++m) {
          if (g.state[g.at(i + k, j + m)] != kInterior) {
            inner = false;
            break;
          }
        }
      }
      if (!inner) continue;
      double ux = du(i, j, true), uy = du(i, j, false);
      double wx = dw(i, j, true), wy = dw(i, j, false);
      double scale = std::fabs(ux) + std::fabs(uy) + std::fabs(wx) + std::fabs(wy) + 1e-300;
      double defect = std::max(std::fabs(wx + uy), std::fabs(wy - ux)) / scale;
      worst = std::max(worst, defect);
    }
  }
  pair.cr_residual = worst;

  // Circulation of the exact conjugate differential around grid plaquettes.
  double loop_worst = 0.0;
  for (int j = 1; j + 2 < ny - 1; j += 7) {
    for (int i = 1; i + 2 < nx - 1; i += 7) {
      bool ok = true;
      for (int k = 0; k < 2 && ok; ++k) {
        for (int m = 0; m < 2; ++m) {
          if (g.state[g.at(i + k, j + m)] != kInterior) {
            ok = false;
            break;
          }
        }
      }
      if (!ok || g.xs[i + 1] > x_limit) continue;
      size_t ref = g.at(i, j);
      auto edge = [&](int ia, int ja, int ib, int jb) {
        double m0, m1;
        if (ja == jb) {
          double dx = g.xs[ib] - g.xs[ia];
          m0 = du(ia, ja, false) * std::exp(sol.gauge[g.at(ia, ja)] - sol.gauge[ref]);
          m1 = du(ib, jb, false) * std::exp(sol.gauge[g.at(ib, jb)] - sol.gauge[ref]);
          return -0.5 * (m0 + m1) * dx;
        }
        double dy = g.ys[jb] - g.ys[ja];
        m0 = du(ia, ja, true) * std::exp(sol.gauge[g.at(ia, ja)] - sol.gauge[ref]);
        m1 = du(ib, jb, true) * std::exp(sol.gauge[g.at(ib, jb)] - sol.gauge[ref]);
        return 0.5 * (m0 + m1) * dy;
      };
      double circ = edge(i, j, i + 1, j) + edge(i + 1, j, i + 1, j + 1) +
                    edge(i + 1, j + 1, i, j + 1) + edge(i, j + 1, i, j);
      double scale = std::fabs(pair.w[ref]) + std::fabs(sol.v[ref]) + 1e-300;
      loop_worst = std::max(loop_worst, std::fabs(circ) / scale);
    }
  }
  pair.loop_residual = loop_worst;
  return pair;
}

std::complex<double> strip_coordinate(const ConjugatePair& pair,
                                      std::complex<double> z) {
  const HarmonicSolution& sol = *pair.sol;
  const Grid& g = sol.grid;
  int i = g.cell_x(z.real());
  int j = g.cell_y(z.imag());
  double tx = std::clamp((z.real() - g.xs[i]) / (g.xs[i + 1] - g.xs[i]), 0.0, 1.0);
  double ty = std::clamp((z.imag() - g.ys[j]) / (g.ys[j + 1] - g.ys[j]), 0.0, 1.0);
  const int ii[4] = {i, i + 1, i, i + 1};
  const int jj[4] = {j, j, j + 1, j + 1};
  const double wt[4] = {(1 - tx) * (1 - ty), tx * (1 - ty), (1 - tx) * ty, tx * ty};
  double sref = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) sref = std::max(sref, sol.gauge[g.at(ii[k], jj[k])]);
  double ur = 0.0, wr = 0.0;
  for (int k = 0; k < 4; ++k) {
    size_t id = g.at(ii[k], jj[k]);
    double f = std::exp(sol.gauge[id] - sref);
    ur += wt[k] * sol.v[id] * f;
    wr += wt[k] * pair.w[id] * f;
  }
  if (!(ur > 0.0)) throw SolverError("strip_coordinate: Re G <= 0 at query point");
  double log_abs = 0.5 * std::log(ur * ur + wr * wr) + sref - sol.log_shift;
  double arg = std::atan2(wr, ur);
  return {log_abs / kPi, arg / kPi};
}

GrowthProfile growth_profile(const HarmonicSolution& sol,
                             const TractGeometry& tract,
                             const std::vector<double>& t_grid, bool fit_slope) {
  GrowthProfile out;
  for (double t : t_grid) {
    if (!(t > tract.x_min() && t < tract.x_cap)) {
      throw GeometryError("growth_profile: t outside the tract extent");
    }
    GrowthPoint p;
    p.t = t;
    int col = sol.column_index(t);
    if (col >= 0) {
      p.log_max_u = sol.max_log_u_on_column(col, -1.0, 1.0);
    } else {
      p.log_max_u = sol.max_log_u_on_segment(t, -1.0 + 1e-9, 1.0 - 1e-9, 4);
    }
    out.points.push_back(p);
  }
  if (fit_slope && out.points.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = out.points.size();
    for (const auto& p : out.points) {
      sx += p.t;
      sy += p.log_max_u;
      sxx += p.t * p.t;
      sxy += p.t * p.log_max_u;
    }
    double denom = n * sxx - sx * sx;
    if (denom > 0) {
      out.slope = (n * sxy - sx * sy) / denom;
      double icpt = (sy - out.slope * sx) / n;
      double lo = out.points.front().log_max_u, hi = lo;
      for (const auto& p : out.points) {
        lo = std::min(lo, p.log_max_u);
        hi = std::max(hi, p.log_max_u);
      }
      double range = std::max(hi - lo, 1e-300);
      for (const auto& p : out.points) {
        double dev = std::fabs(out.slope * p.t + icpt - p.log_max_u) / range;
        out.max_rel_dev = std::max(out.max_rel_dev, dev);
      }
      out.fitted = true;
    }
  }
  return out;
}

namespace {

class SolvedTractModel : public TractModelData {
 public:
  SolvedTractModel(std::shared_ptr<const HarmonicSolution> sol,
                   std::shared_ptr<const TractGeometry> tract)
      : sol_(std::move(sol)), tract_(std::move(tract)) {}

  bool on_tract(std::complex<double> w) const override {
    return tract_->contains(w);
  }
  double log_modulus_at(std::complex<double> w) const override {
    return sol_->log_u_interp(w);
  }
  double off_tract_log_bound() const override { return -1.0; }

 private:
  std::shared_ptr<const HarmonicSolution> sol_;
  std::shared_ptr<const TractGeometry> tract_;
};

}  // namespace

std::shared_ptr<const TractModelData> make_tract_model_data(
    std::shared_ptr<const HarmonicSolution> sol,
    std::shared_ptr<const TractGeometry> tract) {
  return std::make_shared<SolvedTractModel>(std::move(sol), std::move(tract));
}

}  // namespace maxmod
