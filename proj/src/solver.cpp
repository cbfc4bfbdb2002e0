#include "maxmod/solver.hpp"

#include <algorithm>
#include <cmath>

#include "maxmod/kernels.hpp"

namespace maxmod {

GaugeField zero_gauge() {
  return [](double, double) { return 0.0; };
}

GaugeField chain_gauge(const TractGeometry& tract) {
  // Empirical neck offsets (nats) at the feeder entry into the back channel
  // and at the riser exit into the next run; the window geometry is
  // self-similar in eps, so fixed constants hold across scales.  The gauge
  // only needs to track log u to within a few dozen nats.
  constexpr double kNeckA = 10.0;
  constexpr double kNeck6 = 7.0;

  struct SectorGauge {
    double A, A1e, B, D;
  };
  auto sect = std::make_shared<std::vector<SectorGauge>>();
  double A = kPi / (2.0 * tract.ell);
  for (int i = 0; i < tract.sectors; ++i) {
    SectorGauge s;
    s.A = A;
    s.A1e = A + kPi * (tract.xR3(i) - tract.xL1(i));
    s.B = s.A1e + kNeckA + kPi * (tract.xR3(i) - tract.xR4(i)) / tract.w3(i);
    s.D = s.B + kPi * (tract.xR2(i) - tract.xR4(i));
    A = s.D + kNeck6;
    sect->push_back(s);
  }
  double A_stub = A;
  auto rects = tract.rects;
  double ell = tract.ell;
  double stub_x0 = tract.xR6(tract.sectors - 1);

  return [sect, rects, ell, A_stub, stub_x0](double x, double y) {
    // Value for the rectangle containing (x, y); points off the tract clamp
    // to the nearest rectangle (their value only scales zero boundary data).
    double best_d = std::numeric_limits<double>::infinity();
    const TractRect* best = nullptr;
    for (const auto& r : rects) {
      double dx = std::max({r.x0 - x, 0.0, x - r.x1});
      double dy = std::max({r.y0 - y, 0.0, y - r.y1});
      double d = std::hypot(dx, dy);
      if (d < best_d) {
        best_d = d;
        best = &r;
        if (d == 0.0) break;
      }
    }
    double cx = std::clamp(x, best->x0, best->x1);
    if (best->sector == 0) return kPi * (cx + 1.0) / (2.0 * ell);
    int i = best->sector - 1;
    if (i >= static_cast<int>(sect->size())) {
      return A_stub + kPi * (cx - stub_x0);  // stub
    }
    const SectorGauge& s = (*sect)[i];
    switch (best->index) {
      case 1:
        return s.A + kPi * (cx - best->x0);
      case 2:
        return s.A1e;
      case 3:
        return s.A1e + kNeckA + kPi * (best->x1 - cx) / (best->y1 - best->y0);
      case 4:
        return s.B;
      case 5:
        return s.B + kPi * (cx - best->x0);
      default:
        return s.D;  // riser
    }
  };
}

namespace {

int exact_line(const std::vector<double>& lines, double v) {
  auto it = std::lower_bound(lines.begin(), lines.end(), v - 1e-12);
  if (it == lines.end()) return -1;
  if (std::abs(*it - v) <= 1e-12 * std::max(1.0, std::abs(v))) {
    return static_cast<int>(it - lines.begin());
  }
  return -1;
}

}  // namespace

double HarmonicSolution::log_u(int i, int j) const {
  double vv = v[grid.at(i, j)];
  if (!(vv > 0.0)) return -std::numeric_limits<double>::infinity();
  return std::log(vv) + gauge[grid.at(i, j)] - log_shift;
}

double HarmonicSolution::log_u_interp(std::complex<double> z) const {
  int i = grid.cell_x(z.real());
  int j = grid.cell_y(z.imag());
  double tx = (z.real() - grid.xs[i]) / (grid.xs[i + 1] - grid.xs[i]);
  double ty = (z.imag() - grid.ys[j]) / (grid.ys[j + 1] - grid.ys[j]);
  tx = std::clamp(tx, 0.0, 1.0);
  ty = std::clamp(ty, 0.0, 1.0);
  const int ii[4] = {i, i + 1, i, i + 1};
  const int jj[4] = {j, j, j + 1, j + 1};
  const double w[4] = {(1 - tx) * (1 - ty), tx * (1 - ty), (1 - tx) * ty, tx * ty};
  double sref = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) sref = std::max(sref, gauge[grid.at(ii[k], jj[k])]);
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    size_t id = grid.at(ii[k], jj[k]);
    acc += w[k] * v[id] * std::exp(gauge[id] - sref);
  }
  if (!(acc > 0.0)) return -std::numeric_limits<double>::infinity();
  return std::log(acc) + sref - log_shift;
}

double HarmonicSolution::max_log_u_on_column(int i, double y0, double y1) const {
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.ny; ++j) {
    if (grid.ys[j] <= y0 || grid.ys[j] >= y1) continue;
    if (grid.state[grid.at(i, j)] != kInterior) continue;
    best = std::max(best, log_u(i, j));
  }
  return best;
}

double HarmonicSolution::max_log_u_on_segment(double x, double y0, double y1,
                                              int subsamples) const {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> samples;
  for (double y : grid.ys) {
    if (y > y0 && y < y1) samples.push_back(y);
  }
  samples.push_back(y0);
  samples.push_back(y1);
  std::sort(samples.begin(), samples.end());
  for (size_t k = 0; k + 1 < samples.size(); ++k) {
    for (int q = 0; q < subsamples; ++q) {
      double y = samples[k] + (samples[k + 1] - samples[k]) * (q + 0.5) / subsamples;
      best = std::max(best, log_u_interp({x, y}));
    }
  }
  return best;
}

int HarmonicSolution::column_index(double x) const { return exact_line(grid.xs, x); }

HarmonicSolution solve_dirichlet(Grid grid, const GaugeField& gauge_fn,
                                 const CapCondition& cap, std::complex<double> z0,
                                 const SolverOptions& opts) {
  const int nx = grid.nx, ny = grid.ny;
  const size_t n = static_cast<size_t>(nx) * ny;

  HarmonicSolution sol;
  sol.z0 = z0;
  sol.gauge.resize(n);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      sol.gauge[grid.at(i, j)] = gauge_fn(grid.xs[i], grid.ys[j]);
    }
  }

  std::vector<double> cw(n, 0.0), ce(n, 0.0), cs(n, 0.0), cn(n, 0.0), cp(n, 0.0);
  std::vector<double> a_red(n, 0.0), a_black(n, 0.0);
  double omega = opts.omega > 0
                     ? opts.omega
                     : 2.0 / (1.0 + std::sin(kPi / std::max(nx, ny)));

  for (int j = 1; j < ny - 1; ++j) {
    for (int i = 1; i < nx - 1; ++i) {
      size_t id = grid.at(i, j);
      if (grid.state[id] != kInterior) continue;
      double hW = grid.xs[i] - grid.xs[i - 1];
      double hE = grid.xs[i + 1] - grid.xs[i];
      double hS = grid.ys[j] - grid.ys[j - 1];
      double hN = grid.ys[j + 1] - grid.ys[j];
      double bw = 2.0 / (hW * (hW + hE));
      double be = 2.0 / (hE * (hW + hE));
      double bs = 2.0 / (hS * (hS + hN));
      double bn = 2.0 / (hN * (hS + hN));
      double s = sol.gauge[id];
      cw[id] = bw * std::exp(sol.gauge[grid.at(i - 1, j)] - s);
      ce[id] = be * std::exp(sol.gauge[grid.at(i + 1, j)] - s);
      cs[id] = bs * std::exp(sol.gauge[grid.at(i, j - 1)] - s);
      cn[id] = bn * std::exp(sol.gauge[grid.at(i, j + 1)] - s);
      cp[id] = bw + be + bs + bn;
      ((i + j) % 2 == 0 ? a_red : a_black)[id] = omega / cp[id];
    }
  }

  sol.v.assign(n, 0.0);
  if (grid.cap_col >= 0) {
    for (int j = 0; j < ny; ++j) {
      size_t id = grid.at(grid.cap_col, j);
      if (grid.state[id] != kCap) continue;
      double y = grid.ys[j];
      if (cap.kind == CapCondition::Kind::Tent) {
        // Hat profile in v-space; the gauge supplies the overall scale and
        // normalization removes it entirely.
        sol.v[id] = y < 0.5 ? y : 1.0 - y;
      } else {
        sol.v[id] = cap.profile(y) * std::exp(-sol.gauge[id]);
      }
    }
  }

  const auto& be = kernels::active_backend();
  double* v = sol.v.data();
  auto half_sweep = [&](const std::vector<double>& a) {
    for (int j = 1; j < ny - 1; ++j) {
      size_t row = grid.at(0, j);
      be.sor_row(v + row, v + row - nx, v + row + nx, cw.data() + row,
                 ce.data() + row, cs.data() + row, cn.data() + row,
                 cp.data() + row, a.data() + row, 1, nx - 1);
    }
  };
  auto max_resid = [&]() {
    double worst = 0.0;
    for (int j = 1; j < ny - 1; ++j) {
      size_t row = grid.at(0, j);
      worst = std::max(worst, be.resid_row(v + row, v + row - nx, v + row + nx,
                                           cw.data() + row, ce.data() + row,
                                           cs.data() + row, cn.data() + row,
                                           cp.data() + row, 1, nx - 1));
    }
    return worst;
  };

  long sweep = 0;
  double resid = std::numeric_limits<double>::infinity();
  while (sweep < opts.max_sweeps) {
    half_sweep(a_red);
    half_sweep(a_black);
    ++sweep;
    if (sweep % opts.check_every == 0 || sweep == opts.max_sweeps) {
      resid = max_resid();
      if (resid < opts.rel_residual) break;
    }
  }
  if (!(resid < opts.rel_residual)) {
    throw SolverError("solve_dirichlet: no convergence within the sweep budget");
  }
  sol.residual = resid;
  sol.sweeps = sweep;

  int i0 = exact_line(grid.xs, z0.real());
  int j0 = exact_line(grid.ys, z0.imag());
  if (i0 < 0 || j0 < 0 || grid.state[grid.at(i0, j0)] != kInterior) {
    throw SolverError("solve_dirichlet: normalization point is not an interior node");
  }
  double v0 = sol.v[grid.at(i0, j0)];
  if (!(v0 > 0.0)) throw SolverError("solve_dirichlet: nonpositive value at z0");
  sol.log_shift = std::log(v0) + sol.gauge[grid.at(i0, j0)];
  sol.grid = std::move(grid);
  return sol;
}

HarmonicSolution solve_reG(const TractGeometry& tract, double h,
                           const CapCondition& cap, const SolverOptions& opts,
                           std::complex<double> z0) {
  Grid g = build_tract_grid(tract, h);
  return solve_dirichlet(std::move(g), chain_gauge(tract), cap, z0, opts);
}

}  // namespace maxmod
