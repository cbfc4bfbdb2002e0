#include "maxmod/grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace maxmod {

size_t Grid::count_interior() const {
  size_t n = 0;
  for (uint8_t s : state) {
    if (s == kInterior) ++n;
  }
  return n;
}

int Grid::cell_x(double x) const {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  int i = static_cast<int>(it - xs.begin()) - 1;
  return std::clamp(i, 0, nx - 2);
}

int Grid::cell_y(double y) const {
  auto it = std::upper_bound(ys.begin(), ys.end(), y);
  int j = static_cast<int>(it - ys.begin()) - 1;
  return std::clamp(j, 0, ny - 2);
}

namespace {

void fill_uniform(std::vector<double>& lines, double a, double b, double h) {
  if (!(b > a) || !(h > 0)) return;
  int n = std::max(1, static_cast<int>(std::ceil((b - a) / h)));
  for (int k = 1; k < n; ++k) lines.push_back(a + (b - a) * k / n);
}

// Spacing h0 at both ends growing geometrically toward the middle, capped.
void fill_graded(std::vector<double>& lines, double a, double b, double h0,
                 double hmax, double ratio = 1.3) {
  if (!(b > a)) return;
  double mid = 0.5 * (a + b);
  double x = a, h = h0;
  while (x + h < mid) {
    x += h;
    lines.push_back(x);
    h = std::min(h * ratio, hmax);
  }
  x = b;
  h = h0;
  while (x - h > mid) {
    x -= h;
    lines.push_back(x);
    h = std::min(h * ratio, hmax);
  }
  lines.push_back(mid);
}

std::vector<double> finalize(std::vector<double>& lines) {
  std::sort(lines.begin(), lines.end());
  std::vector<double> out;
  for (double v : lines) {
    if (out.empty() || v - out.back() > 1e-12 * std::max(1.0, std::abs(v))) {
      out.push_back(v);
    }
  }
  return out;
}

void classify(Grid& g, const TractGeometry& tract) {
  g.nx = static_cast<int>(g.xs.size());
  g.ny = static_cast<int>(g.ys.size());
  g.state.assign(static_cast<size_t>(g.nx) * g.ny, kOutside);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      std::complex<double> z{g.xs[i], g.ys[j]};
      if (tract.contains(z)) g.state[g.at(i, j)] = kInterior;
    }
  }
  // Cap nodes on the truncation line, strictly between the stub corners.
  g.cap_col = g.nx - 1;
  for (int j = 0; j < g.ny; ++j) {
    if (g.ys[j] > 0.0 && g.ys[j] < 1.0) g.state[g.at(g.cap_col, j)] = kCap;
  }
}

void check_rect_resolution(const Grid& g, const TractGeometry& tract) {
  for (const auto& r : tract.rects) {
    int cx = 0, cy = 0;
    for (double x : g.xs) {
      if (x > r.x0 && x < r.x1) ++cx;
    }
    for (double y : g.ys) {
      if (y > r.y0 && y < r.y1) ++cy;
    }
    if (cx < 2 || cy < 2) {
      throw GeometryError("grid: a tract rectangle is thinner than 3 cells");
    }
  }
}

void check_mask_connectivity(const Grid& g) {
  size_t total = g.count_interior();
  if (total == 0) throw GeometryError("grid: empty interior mask");
  std::vector<uint8_t> seen(g.state.size(), 0);
  std::deque<std::pair<int, int>> q;
  for (int j = 0; j < g.ny && q.empty(); ++j) {
    for (int i = 0; i < g.nx && q.empty(); ++i) {
      if (g.interior(i, j)) {
        q.emplace_back(i, j);
        seen[g.at(i, j)] = 1;
      }
    }
  }
  size_t reached = 0;
  while (!q.empty()) {
    auto [i, j] = q.front();
    q.pop_front();
    ++reached;
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int a = i + di[k], b = j + dj[k];
      if (a < 0 || a >= g.nx || b < 0 || b >= g.ny) continue;
      if (!g.interior(a, b) || seen[g.at(a, b)]) continue;
      seen[g.at(a, b)] = 1;
      q.emplace_back(a, b);
    }
  }
  if (reached != total) {
    throw GeometryError("grid: interior mask is disconnected");
  }
}

}  // namespace

Grid build_tract_grid(const TractGeometry& tract, double h) {
  if (!(h > 0)) throw GeometryError("build_tract_grid: h must be > 0");
  const LogSpec& sp = tract.spec;
  double eps_min = *std::min_element(sp.eps.begin(), sp.eps.begin() + tract.sectors);
  // Proportional coarse caps: the default fine spacing eps/96 pairs with a
  // 1/24 transverse cap; other h values scale the whole hierarchy.
  double scale = h / (eps_min / 96.0);
  double cap_run = std::min(0.05 * scale, 0.2);
  double cap_transverse = std::min((1.0 / 24.0) * scale, 0.1);

  std::vector<double> X, Y;
  X.insert(X.end(), {-2.0, -1.0, 0.0, tract.x_cap});
  Y.insert(Y.end(), {-1.0, 0.0, 1.0, -tract.ell, tract.ell});

  for (int i = 0; i < tract.sectors; ++i) {
    double e = tract.eps(i), w = tract.w3(i);
    X.insert(X.end(), {tract.xL4(i), tract.xR4(i), tract.xR3(i), tract.xR2(i),
                       tract.xR6(i), tract.xL1(i), tract.xn(i)});
    Y.push_back(-w);
    fill_uniform(X, tract.xL4(i), tract.xR4(i), std::min(h, e / 256.0));
    fill_uniform(X, tract.xR4(i), tract.xR3(i), h);
    fill_uniform(X, tract.xR3(i), tract.xR2(i), std::max(h, e / 16.0));
    fill_uniform(X, tract.xR2(i), tract.xR6(i), std::max(h, e / 16.0));
    // Transverse band across the back channel and just below its floor.
    fill_uniform(Y, -w, 0.0, std::min(h, w / 3.0));
    fill_uniform(Y, -2.0 * w, -w, std::min(h, w / 3.0) * 2.0);
    double run_from = (i == 0) ? 0.0 : tract.xR6(i - 1);
    fill_graded(X, run_from, tract.xL4(i), std::max(h, e / 16.0), cap_run);
  }
  fill_uniform(X, tract.xR6(tract.sectors - 1), tract.x_cap,
               std::max(h, tract.eps(tract.sectors - 1) / 16.0));
  // Anchor box and the gate column.
  fill_graded(X, -2.0, 0.0, std::min(tract.ell / 4.0, cap_transverse), cap_run);
  fill_uniform(Y, -tract.ell, tract.ell, std::min(tract.ell / 4.0, cap_transverse));
  fill_uniform(Y, tract.ell, std::min(2.0 * tract.ell, 1.0),
               std::min(tract.ell / 2.0, cap_transverse));
  // Transverse fills over the unit bands.
  fill_uniform(Y, 0.0, 1.0, cap_transverse);
  fill_uniform(Y, -1.0, -2.0 * tract.w3(0), cap_transverse);

  Grid g;
  g.xs = finalize(X);
  g.ys = finalize(Y);
  classify(g, tract);
  check_rect_resolution(g, tract);
  check_mask_connectivity(g);
  return g;
}

Grid build_box_grid(double x0, double x1, double y0, double y1, double h) {
  if (!(x1 > x0 && y1 > y0 && h > 0)) throw GeometryError("build_box_grid: bad box");
  Grid g;
  int nx = std::max(2, static_cast<int>(std::lround((x1 - x0) / h)));
  int ny = std::max(2, static_cast<int>(std::lround((y1 - y0) / h)));
  for (int i = 0; i <= nx; ++i) g.xs.push_back(x0 + (x1 - x0) * i / nx);
  for (int j = 0; j <= ny; ++j) g.ys.push_back(y0 + (y1 - y0) * j / ny);
  g.nx = nx + 1;
  g.ny = ny + 1;
  g.state.assign(static_cast<size_t>(g.nx) * g.ny, kOutside);
  for (int j = 1; j < g.ny - 1; ++j) {
    for (int i = 1; i < g.nx - 1; ++i) g.state[g.at(i, j)] = kInterior;
  }
  g.cap_col = g.nx - 1;
  for (int j = 1; j < g.ny - 1; ++j) g.state[g.at(g.cap_col, j)] = kCap;
  return g;
}

void validate_tract_raster(const TractGeometry& tract) {
  // Cell raster on the feature lines: every rectangle edge is a line, so a
  // cell is entirely inside or outside and a center test is exact.
  std::vector<double> X, Y;
  for (const auto& r : tract.rects) {
    X.push_back(r.x0);
    X.push_back(r.x1);
    X.push_back(0.5 * (r.x0 + r.x1));
    Y.push_back(r.y0);
    Y.push_back(r.y1);
    Y.push_back(0.5 * (r.y0 + r.y1));
  }
  X.push_back(-3.0);
  X.push_back(tract.x_cap + 1.0);
  Y.push_back(-2.0);
  Y.push_back(2.0);
  std::vector<double> xs = finalize(X), ys = finalize(Y);
  int nx = static_cast<int>(xs.size()) - 1, ny = static_cast<int>(ys.size()) - 1;

  auto inside = [&](int i, int j) {
    std::complex<double> c{0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1])};
    return tract.contains(c);
  };
  auto blocked = [&](double x, double y) {
    // A shared cell edge with this midpoint is blocked if a boundary
    // segment covers it.
    for (const auto& s : tract.boundary) {
      if (x >= s.x0 && x <= s.x1 && y >= s.y0 && y <= s.y1 &&
          (s.x0 == s.x1 ? x == s.x0 : true) && (s.y0 == s.y1 ? y == s.y0 : true)) {
        return true;
      }
    }
    return false;
  };

  std::vector<uint8_t> in(static_cast<size_t>(nx) * ny);
  size_t n_in = 0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      in[static_cast<size_t>(j) * nx + i] = inside(i, j) ? 1 : 0;
      n_in += in[static_cast<size_t>(j) * nx + i];
    }
  }
  if (n_in == 0) throw GeometryError("tract raster: empty interior");

  auto bfs = [&](bool want_inside, int si, int sj) {
    std::vector<uint8_t> seen(in.size(), 0);
    std::deque<std::pair<int, int>> q{{si, sj}};
    seen[static_cast<size_t>(sj) * nx + si] = 1;
    size_t reached = 0;
    while (!q.empty()) {
      auto [i, j] = q.front();
      q.pop_front();
      ++reached;
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        int a = i + di[k], b = j + dj[k];
        if (a < 0 || a >= nx || b < 0 || b >= ny) continue;
        size_t id = static_cast<size_t>(b) * nx + a;
        if (seen[id] || (in[id] == 1) != want_inside) continue;
        if (want_inside) {
          // Crossing between cells must not pass through a wall.
          double mx, my;
          if (k < 2) {
            mx = xs[std::max(i, a)];
            my = 0.5 * (ys[j] + ys[j + 1]);
          } else {
            mx = 0.5 * (xs[i] + xs[i + 1]);
            my = ys[std::max(j, b)];
          }
          if (blocked(mx, my)) continue;
        }
        seen[id] = 1;
        q.emplace_back(a, b);
      }
    }
    return reached;
  };

  int si = -1, sj = -1;
  for (int j = 0; j < ny && si < 0; ++j) {
    for (int i = 0; i < nx && si < 0; ++i) {
      if (in[static_cast<size_t>(j) * nx + i]) {
        si = i;
        sj = j;
      }
    }
  }
  if (bfs(true, si, sj) != n_in) {
    throw GeometryError("tract raster: interior disconnected");
  }
  if (bfs(false, 0, 0) != in.size() - n_in) {
    throw GeometryError("tract raster: complement has a bounded component (hole)");
  }
  (void)blocked;
}

}  // namespace maxmod
