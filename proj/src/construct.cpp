#include "maxmod/construct.hpp"

#include <algorithm>
#include <cmath>

namespace maxmod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(e^m - e^{-1}); -inf when the difference is nonpositive.
double minus_band(double m) {
  if (!(m > -1.0)) return -kInf;
  return log_diff_exp(m, -1.0);
}

// log(e^m + e^{-1}).
double plus_band(double m) { return log_sum_exp(m, -1.0); }

struct ColumnPair {
  double t;
  double run;    // max log Re G over the upper run at Re z = t
  double shaft;  // max log Re G over the shaft at Re z = t
};

std::vector<ColumnPair> window_columns(const HarmonicSolution& sol,
                                       const TractGeometry& tract, int sector) {
  double xl = tract.xL4(sector), xr = tract.xR4(sector);
  std::vector<ColumnPair> cols;
  for (int i = 0; i < sol.grid.nx; ++i) {
    double x = sol.grid.xs[i];
    if (x <= xl || x >= xr) continue;
    cols.push_back({x, sol.max_log_u_on_column(i, 0.0, 1.0),
                    sol.max_log_u_on_column(i, -1.0, 0.0)});
  }
  if (cols.empty()) throw GeometryError("phi_n: no grid columns inside I_n");
  return cols;
}

// First column index where lhs(shaft) >= rhs(run) under the given band
// adjustments; -1 when the crossing is beyond the sampled interval.
int first_crossing(const std::vector<ColumnPair>& cols, bool shaft_down,
                   bool run_up) {
  for (size_t k = 0; k < cols.size(); ++k) {
    double lhs = shaft_down ? minus_band(cols[k].shaft) : plus_band(cols[k].shaft);
    double rhs = run_up ? plus_band(cols[k].run) : minus_band(cols[k].run);
    if (lhs >= rhs) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

PhiEvaluation phi_n(const HarmonicSolution& sol, const TractGeometry& tract,
                    int sector, const PerturbationBound& bound) {
  bound.validate();
  if (sector < 0 || sector >= tract.sectors) {
    throw GeometryError("phi_n: sector out of range");
  }
  if (!(tract.xL4(sector) > bound.L() + 1.0)) {
    throw GeometryError("phi_n: sector below the perturbation floor L + 1");
  }

  std::vector<ColumnPair> cols = window_columns(sol, tract, sector);
  PhiEvaluation out;
  out.sector = sector;
  out.delta = tract.delta;
  for (const auto& c : cols) out.profile.push_back({c.t, c.shaft, c.run});

  double xn = tract.xn(sector);
  double right = tract.xR4(sector);
  // Central crossing: modulus modeled as exp(Re G) on both columns.
  int k0 = -1;
  for (size_t k = 0; k < cols.size(); ++k) {
    if (cols[k].shaft >= cols[k].run) {
      k0 = static_cast<int>(k);
      break;
    }
  }
  if (k0 < 0) {
    out.crossing_found = false;
    out.t_star = right;
    out.value = right - xn;  // crossing beyond the window: positive by signs
    out.lo = out.value;
    out.hi = out.value;
    return out;
  }
  out.crossing_found = true;
  out.t_star = cols[k0].t;
  out.value = out.t_star - xn;

  int klo = first_crossing(cols, /*shaft_down=*/false, /*run_up=*/false);
  int khi = first_crossing(cols, /*shaft_down=*/true, /*run_up=*/true);
  out.lo = (klo >= 0 ? cols[klo].t : right) - xn;
  out.hi = (khi >= 0 ? cols[khi].t : right) - xn;
  if (out.lo > out.hi) std::swap(out.lo, out.hi);
  return out;
}

DeltaSolveReport solve_delta(const LogSpec& spec, double ell,
                             const std::vector<int>& tuned_sectors,
                             const DeltaSolveOptions& opts) {
  spec.validate();
  int N = static_cast<int>(spec.x.size());
  for (int n : tuned_sectors) {
    if (n < 0 || n >= N) throw GeometryError("solve_delta: sector out of range");
  }
  double eps_min = *std::min_element(spec.eps.begin(), spec.eps.end());
  double h = opts.grid_h > 0 ? opts.grid_h : eps_min / 96.0;
  PerturbationBound bound;
  bound.M_const = std::exp(spec.L);

  DeltaSolveReport rep;
  rep.delta.assign(N, 0.0);

  auto eval_phi = [&](int sector) {
    TractGeometry t = build_tract(spec, rep.delta, ell, N);
    HarmonicSolution sol = solve_reG(t, h, CapCondition::tent(), opts.solver);
    ++rep.solves;
    return phi_n(sol, t, sector, bound);
  };
  auto tol_for = [&](int n) {
    return opts.tol > 0 ? opts.tol : std::min(1e-3, spec.eps[n] / 80.0);
  };

  rep.endpoint_values.assign(tuned_sectors.size(), {0.0, 0.0});
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    for (size_t a = 0; a < tuned_sectors.size(); ++a) {
      int n = tuned_sectors[a];
      double eps8 = spec.eps[n] / 8.0;
      double tol = tol_for(n);
      if (rep.solves >= opts.solve_budget) break;

      double saved = rep.delta[n];
      if (sweep == 0) {
        rep.delta[n] = 0.0;
        double phi0 = eval_phi(n).value;
        rep.delta[n] = eps8;
        double phi1 = eval_phi(n).value;
        rep.endpoint_values[a] = {phi0, phi1};
        if (!(phi0 > 0.0) || !(phi1 < 0.0)) {
          throw SolverError("solve_delta: endpoint signs of phi_n are wrong");
        }
        rep.delta[n] = saved;
      }

      double lo = 0.0, hi = eps8;
      double best_delta = rep.delta[n];
      double best_abs = kInf;
      while (hi - lo > tol / 4.0 && rep.solves < opts.solve_budget) {
        double mid = 0.5 * (lo + hi);
        rep.delta[n] = mid;
        double phi = eval_phi(n).value;
        if (std::abs(phi) < best_abs) {
          best_abs = std::abs(phi);
          best_delta = mid;
        }
        if (std::abs(phi) < tol) break;
        if (phi > 0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      rep.delta[n] = best_delta;
    }

    // Simultaneous residuals at the sweep's end state.
    rep.phi_values.clear();
    bool all_ok = true;
    for (int n : tuned_sectors) {
      double phi = eval_phi(n).value;
      rep.phi_values.push_back(phi);
      if (std::abs(phi) >= tol_for(n)) all_ok = false;
    }
    rep.sweeps = sweep + 1;
    if (all_ok) {
      rep.converged = true;
      break;
    }
    if (rep.solves >= opts.solve_budget) break;
  }
  return rep;
}

DiscontinuityCertificate certify_discontinuity(const HarmonicSolution& sol,
                                               const TractGeometry& tract,
                                               int sector,
                                               const PerturbationBound& bound) {
  bound.validate();
  DiscontinuityCertificate cert;
  cert.sector = sector;
  cert.x_n = tract.xn(sector);

  const double slack2 = std::log(2.0) - 1.0;  // log(2 e^{-1})

  // (a) Crosscut floor: every separating vertical across the sector window
  // keeps its channel max of Re G at 4, with the robustness pad.
  {
    double lo = tract.xL1(sector), hi = tract.xR6(sector);
    double pad = 1e-7 * std::max(1.0, std::abs(hi));
    double worst = kInf;
    const int kSamples = 48;
    for (int q = 0; q <= kSamples; ++q) {
      double s = lo + pad + (hi - lo - 2 * pad) * q / kSamples;
      for (const auto& c : tract.channels_at(s)) {
        if (!c.separating) continue;
        double m = sol.max_log_u_on_segment(s, c.y0, c.y1, 2);
        worst = std::min(worst, m);
      }
    }
    cert.margin_crosscut = worst - log_sum_exp(std::log(4.0), slack2);
  }

  // (b) The +1 column gap past the transfer, under the adversarial band.
  PhiEvaluation phi = phi_n(sol, tract, sector, bound);
  cert.achieved = phi.t_star;
  cert.target_miss = std::abs(phi.t_star - cert.x_n);
  {
    double worst = kInf;
    bool past = false;
    for (const auto& p : phi.profile) {
      if (p.t < phi.t_star) continue;
      past = true;
      double lhs = log_diff_exp(std::max(p.shaft_log, -1.0), -1.0);
      double rhs = log_sum_exp(log_sum_exp(p.run_log, -1.0),
                               log_sum_exp(0.0, slack2));
      worst = std::min(worst, lhs - rhs);
    }
    cert.margin_gap = past && phi.crossing_found ? worst : -kInf;
  }

  // (c) Containment: from x_1 - 2 eps_1 on, the tract's column max clears
  // e^4 while everything off the tract is capped by the perturbation.
  {
    double from = tract.spec.x[0] - 2.0 * tract.spec.eps[0];
    double to = trust_x_max(tract);
    double worst = kInf;
    const int kSamples = 64;
    for (int q = 0; q <= kSamples; ++q) {
      double s = from + (to - from) * q / kSamples;
      double m = sol.max_log_u_on_segment(s, -1.0 + 1e-9, 1.0 - 1e-9, 2);
      worst = std::min(worst, m);
    }
    cert.margin_containment = worst - log_sum_exp(4.0, slack2);
  }

  // (d) Robust handover: below the transfer the run wins against the banded
  // shaft; at the transfer the shaft wins against the banded run.
  {
    double worst = kInf;
    for (const auto& p : phi.profile) {
      if (p.t >= phi.t_star) break;
      double lhs = minus_band(p.run_log);
      double rhs = log_sum_exp(plus_band(p.shaft_log), slack2);
      worst = std::min(worst, lhs - rhs);
    }
    // The wall column itself carries no shaft values; the run dominates the
    // bare perturbation there.
    {
      int wall = sol.column_index(tract.xL4(sector));
      if (wall >= 0) {
        double run = sol.max_log_u_on_column(wall, 0.0, 1.0);
        double lhs = minus_band(run);
        double rhs = log_sum_exp(-1.0, slack2);
        worst = std::min(worst, lhs - rhs);
      }
    }
    if (phi.crossing_found) {
      for (const auto& p : phi.profile) {
        if (p.t != phi.t_star) continue;
        double lhs = minus_band(p.shaft_log);
        double rhs = log_sum_exp(plus_band(p.run_log), slack2);
        worst = std::min(worst, lhs - rhs);
      }
    } else {
      worst = -kInf;
    }
    cert.margin_transfer = worst;
  }

  cert.robust = cert.margin_crosscut > 0 && cert.margin_gap > 0 &&
                cert.margin_containment > 0 && cert.margin_transfer > 0;
  return cert;
}

std::vector<std::pair<double, double>> mlog_to_m(
    const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> out;
  out.reserve(points.size());
  for (const auto& [x, y] : points) {
    double theta = std::fmod(y, 2.0 * kPi);
    if (theta < 0) theta += 2.0 * kPi;
    out.emplace_back(std::exp(x), theta);
  }
  return out;
}

}  // namespace maxmod
