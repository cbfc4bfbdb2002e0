#include "maxmod/branches.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace maxmod {

namespace {

double ang_dist(double a, double b) {
  double d = std::abs(std::remainder(a - b, 2.0 * kPi));
  return d;
}

// Value and angle of the local maximum of the circle profile nearest to a
// reference angle; falls back to direct evaluation if no peak is nearby.
std::pair<double, double> branch_value_at(const FunctionModel& model, double r,
                                          double theta_ref, double angle_tol,
                                          const TraceOptions& opts) {
  CirclePeaks cp = circle_peaks(model, r, opts.samples, opts.refine_tol);
  double best_d = std::numeric_limits<double>::infinity();
  std::optional<std::pair<double, double>> best;
  for (const auto& p : cp.peaks) {
    double d = ang_dist(p.first, theta_ref);
    if (d < best_d) {
      best_d = d;
      best = p;
    }
  }
  if (best && best_d <= angle_tol) return *best;
  return {theta_ref, log_modulus_at(model, r, theta_ref)};
}

// Max over all peaks at angular distance > angle_tol from theta_ref.
double others_max(const CirclePeaks& cp, double theta_ref, double angle_tol) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& p : cp.peaks) {
    if (ang_dist(p.first, theta_ref) > angle_tol) m = std::max(m, p.second);
  }
  return m;
}

}  // namespace

TraceResult trace_branches(const FunctionModel& model, double r_min, double r_max,
                           int steps, double angle_tol, const TraceOptions& opts) {
  if (!(0 < r_min && r_min < r_max)) throw EvalError("trace_branches: bad radius range");
  if (steps < 2) throw EvalError("trace_branches: steps must be >= 2");
  if (!(angle_tol > 0)) throw EvalError("trace_branches: angle_tol must be > 0");

  TraceResult out;
  out.options = opts;
  out.radial_step = (r_max - r_min) / (steps - 1);

  struct Active {
    int branch_index;  // into out.branches
    double theta;
  };
  std::vector<Active> active;
  int next_id = 0;

  for (int i = 0; i < steps; ++i) {
    double r = r_min + i * out.radial_step;
    CirclePeaks cp = circle_peaks(model, r, opts.samples, opts.refine_tol);
    if (cp.degenerate) {
      if (out.warnings.empty() || out.warnings.back().find("degenerate") == std::string::npos) {
        std::ostringstream ss;
        ss << "degenerate circle (all angles maximize) at r=" << r;
        out.warnings.push_back(ss.str());
      }
      active.clear();
      continue;
    }

    // Greedy nearest-angle matching between active branches and new peaks.
    struct Cand {
      double d;
      size_t peak;
      size_t act;
    };
    std::vector<Cand> cands;
    for (size_t p = 0; p < cp.peaks.size(); ++p) {
      for (size_t a = 0; a < active.size(); ++a) {
        double d = ang_dist(cp.peaks[p].first, active[a].theta);
        if (d <= 2.0 * angle_tol) cands.push_back({d, p, a});
      }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& x, const Cand& y) { return x.d < y.d; });
    std::vector<int> peak_to_branch(cp.peaks.size(), -1);
    std::vector<bool> act_used(active.size(), false);
    for (const auto& c : cands) {
      if (peak_to_branch[c.peak] >= 0 || act_used[c.act]) continue;
      if (c.d > angle_tol) {
        std::ostringstream ss;
        ss << "ambiguous branch continuation near r=" << r << " theta="
           << cp.peaks[c.peak].first << " (angular move " << c.d
           << " exceeds tolerance " << angle_tol << "); refine the radius grid";
        out.warnings.push_back(ss.str());
        continue;
      }
      peak_to_branch[c.peak] = out.branches[active[c.act].branch_index].id;
      act_used[c.act] = true;
      active[c.act].theta = cp.peaks[c.peak].first;
      out.branches[active[c.act].branch_index].samples.push_back(
          {r, cp.peaks[c.peak].first, cp.peaks[c.peak].second,
           cp.peaks[c.peak].second >= cp.log_M - opts.refine_tol});
    }
    // Unmatched peaks are born as new branches; unmatched branches die.
    std::vector<Active> still;
    for (size_t a = 0; a < active.size(); ++a) {
      if (act_used[a]) still.push_back(active[a]);
    }
    for (size_t p = 0; p < cp.peaks.size(); ++p) {
      if (peak_to_branch[p] >= 0) continue;
      Branch b;
      b.id = next_id++;
      b.samples.push_back({r, cp.peaks[p].first, cp.peaks[p].second,
                           cp.peaks[p].second >= cp.log_M - opts.refine_tol});
      out.branches.push_back(std::move(b));
      still.push_back({static_cast<int>(out.branches.size() - 1), cp.peaks[p].first});
    }
    active = std::move(still);
  }
  return out;
}

namespace {

struct TransferEvent {
  int branch_id;
  double theta;     // branch angle at the event grid radius
  double r_prev;    // last grid radius where the branch was not global
  double r_event;   // first grid radius of the global run
  bool run_is_single;  // global run covers exactly one grid radius
};

std::vector<TransferEvent> find_events(const TraceResult& tr, double r_min) {
  std::vector<TransferEvent> events;
  for (const auto& b : tr.branches) {
    for (size_t k = 0; k < b.samples.size(); ++k) {
      if (!b.samples[k].is_global) continue;
      bool run_start = (k == 0) || !b.samples[k - 1].is_global;
      if (!run_start) continue;
      // Runs that begin at the window edge cannot be certified.
      if (b.samples[k].r <= r_min + 1e-12) continue;
      size_t e = k;
      while (e + 1 < b.samples.size() && b.samples[e + 1].is_global) ++e;
      events.push_back({b.id, b.samples[k].theta,
                        b.samples[k].r - tr.radial_step, b.samples[k].r,
                        e == k});
    }
  }
  return events;
}

// Sign of "branch beats every other maximum" at radius r.
double transfer_margin(const FunctionModel& model, double r, double theta_ref,
                       double angle_tol, const TraceOptions& opts) {
  CirclePeaks cp = circle_peaks(model, r, opts.samples, opts.refine_tol);
  auto [th, val] = branch_value_at(model, r, theta_ref, angle_tol, opts);
  return val - others_max(cp, th, angle_tol);
}

}  // namespace

std::vector<Discontinuity> detect_discontinuities(const FunctionModel& model,
                                                  double r_min, double r_max,
                                                  int steps, double tol,
                                                  double angle_tol,
                                                  const TraceOptions& opts) {
  TraceResult tr = trace_branches(model, r_min, r_max, steps, angle_tol, opts);
  std::vector<Discontinuity> result;
  for (const auto& ev : find_events(tr, r_min)) {
    double lo = ev.r_prev, hi = ev.r_event;
    double mlo = transfer_margin(model, lo, ev.theta, angle_tol, opts);
    if (mlo >= 0) {
      // Already winning one step back: treat the grid radius as the event
      // (resolution limit); keep a positive gap by stepping further back.
      continue;
    }
    while (hi - lo > tol) {
      double mid = 0.5 * (lo + hi);
      double m = transfer_margin(model, mid, ev.theta, angle_tol, opts);
      if (m >= 0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    double r_star = 0.5 * (lo + hi);
    auto [theta_star, val_star] = branch_value_at(model, r_star, ev.theta, angle_tol, opts);
    (void)val_star;
    double r_left = std::max(r_min, r_star - tr.radial_step);
    double gap = -transfer_margin(model, r_left, ev.theta, angle_tol, opts);
    if (!(gap > 0)) continue;
    Discontinuity d;
    d.r = r_star;
    d.theta = theta_star;
    d.branch_id = ev.branch_id;
    d.left_gap = gap;
    d.kind = Discontinuity::Kind::Jump;
    result.push_back(d);
  }
  std::sort(result.begin(), result.end(),
            [](const Discontinuity& a, const Discontinuity& b) { return a.r < b.r; });
  // Ties within refine_tol at (numerically) the same radius: retain both but
  // re-examine with 4x angular sampling before reporting duplicates.
  std::vector<Discontinuity> dedup;
  for (const auto& d : result) {
    if (!dedup.empty() && std::abs(dedup.back().r - d.r) < tol &&
        ang_dist(dedup.back().theta, d.theta) < 1e-6) {
      continue;
    }
    if (!dedup.empty() && std::abs(dedup.back().r - d.r) < tol) {
      TraceOptions fine = opts;
      fine.samples *= 4;
      double m1 = transfer_margin(model, d.r + tol, dedup.back().theta, angle_tol, fine);
      double m2 = transfer_margin(model, d.r + tol, d.theta, angle_tol, fine);
      if (std::abs(m1 - m2) > fine.refine_tol) {
        // One candidate wins after refinement; keep the winner only.
        if (m2 > m1) dedup.back() = d;
        continue;
      }
    }
    dedup.push_back(d);
  }
  return dedup;
}

std::vector<Discontinuity> isolated_points(const FunctionModel& model,
                                           double r_min, double r_max, int steps,
                                           double tol, double angle_tol,
                                           const TraceOptions& opts) {
  TraceResult tr = trace_branches(model, r_min, r_max, steps, angle_tol, opts);
  std::vector<Discontinuity> result;
  for (const auto& ev : find_events(tr, r_min)) {
    if (!ev.run_is_single) continue;
    // Gap to the rest of the circle: nonnegative, zero exactly at the touch
    // radius.  Localize its minimum by ternary search.
    auto gap = [&](double r) {
      return -transfer_margin(model, r, ev.theta, angle_tol, opts);
    };
    double lo = std::max(r_min, ev.r_event - tr.radial_step);
    double hi = std::min(r_max, ev.r_event + tr.radial_step);
    for (int it = 0; it < 200 && hi - lo > tol * 1e-3; ++it) {
      double m1 = lo + (hi - lo) / 3.0;
      double m2 = hi - (hi - lo) / 3.0;
      if (gap(m1) < gap(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    double r_star = 0.5 * (lo + hi);
    double g_star = gap(r_star);
    if (g_star > opts.refine_tol) continue;  // never actually global
    // Width of the interval where the branch stays within refine_tol of the
    // global maximum must be below tol on both sides.
    double wlo = r_star, whi = r_star;
    double step = tol / 4.0;
    while (wlo > r_star - 2.0 * tol && gap(wlo - step) <= opts.refine_tol) wlo -= step;
    while (whi < r_star + 2.0 * tol && gap(whi + step) <= opts.refine_tol) whi += step;
    if (r_star - wlo >= tol || whi - r_star >= tol) continue;
    double r_left = std::max(r_min, r_star - tr.radial_step);
    double left_gap = gap(r_left);
    if (!(left_gap > 0)) continue;
    auto [theta_star, val_star] = branch_value_at(model, r_star, ev.theta, angle_tol, opts);
    (void)val_star;
    Discontinuity d;
    d.r = r_star;
    d.theta = theta_star;
    d.branch_id = ev.branch_id;
    d.left_gap = left_gap;
    d.kind = Discontinuity::Kind::IsolatedPoint;
    result.push_back(d);
  }
  std::sort(result.begin(), result.end(),
            [](const Discontinuity& a, const Discontinuity& b) { return a.r < b.r; });
  return result;
}

OrderEstimate estimate_order(const FunctionModel& model,
                             const std::vector<double>& r_grid,
                             const TraceOptions& opts) {
  if (r_grid.size() < 4) throw EvalError("estimate_order: need >= 4 grid points");
  for (size_t i = 1; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > r_grid[i - 1])) throw EvalError("estimate_order: grid not increasing");
  }
  OrderEstimate out;
  for (double r : r_grid) {
    double logM = circle_max(model, r, opts.samples, opts.refine_tol).log_M;
    if (!(r > 1.0) || !(logM > 0.0)) {
      out.skipped_r.push_back(r);
      continue;
    }
    out.slopes.push_back(std::log(logM) / std::log(r));
    out.used_r.push_back(r);
  }
  size_t n = out.slopes.size();
  if (n >= 3) {
    double d1 = std::abs(out.slopes[n - 1] - out.slopes[n - 2]);
    double d2 = std::abs(out.slopes[n - 2] - out.slopes[n - 3]);
    if (d1 <= 0.05 && d2 <= 0.05) {
      out.finite = true;
      out.order = out.slopes[n - 1];
    }
  }
  out.increasing = n >= 2;
  for (size_t i = 1; i < n; ++i) {
    if (out.slopes[i] <= out.slopes[i - 1]) out.increasing = false;
  }
  return out;
}

}  // namespace maxmod
