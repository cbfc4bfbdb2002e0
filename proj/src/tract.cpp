#include "maxmod/tract.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "maxmod/grid.hpp"

namespace maxmod {

namespace {

double seg_dist(const BoundarySeg& s, double x, double y) {
  double dx = std::max({s.x0 - x, 0.0, x - s.x1});
  double dy = std::max({s.y0 - y, 0.0, y - s.y1});
  return std::hypot(dx, dy);
}

bool on_seg(const BoundarySeg& s, double x, double y) {
  return x >= s.x0 && x <= s.x1 && y >= s.y0 && y <= s.y1 &&
         (s.x0 == s.x1 ? x == s.x0 : true) && (s.y0 == s.y1 ? y == s.y0 : true);
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
  bool same(int a, int b) { return find(a) == find(b); }
};

}  // namespace

TractGeometry build_tract(const LogSpec& spec, const std::vector<double>& delta,
                          double ell, int sector_count) {
  spec.validate();
  if (sector_count < 1 || sector_count > static_cast<int>(spec.x.size())) {
    throw GeometryError("build_tract: sector count out of range");
  }
  if (static_cast<int>(delta.size()) != sector_count) {
    throw GeometryError("build_tract: delta size mismatch");
  }
  if (!(ell > 0 && ell < 1)) throw GeometryError("build_tract: need 0 < ell < 1");
  for (int i = 0; i < sector_count; ++i) {
    if (!(delta[i] >= 0 && delta[i] <= spec.eps[i] / 8.0)) {
      throw GeometryError("build_tract: delta_n outside [0, eps_n/8]");
    }
  }

  TractGeometry t;
  t.spec = spec;
  t.delta = delta;
  t.ell = ell;
  t.sectors = sector_count;
  t.x_cap = spec.x[sector_count - 1] + 2.0 * spec.eps[sector_count - 1];

  t.rects.push_back({0, 0, -2.0, 0.0, -ell, ell});
  for (int i = 0; i < sector_count; ++i) {
    int n = i + 1;
    double w = t.w3(i);
    t.rects.push_back({n, 1, t.xL1(i), t.xR3(i), 0.0, 1.0});
    t.rects.push_back({n, 2, t.xR3(i), t.xR2(i), -w, 1.0});
    t.rects.push_back({n, 3, t.xR4(i), t.xR3(i), -w, 0.0});
    t.rects.push_back({n, 4, t.xL4(i), t.xR4(i), -1.0, 0.0});
    t.rects.push_back({n, 5, t.xR4(i), t.xR2(i), -1.0, -w});
    t.rects.push_back({n, 6, t.xR2(i), t.xR6(i), -1.0, 1.0});
  }
  t.rects.push_back({sector_count + 1, 1, t.xR6(sector_count - 1), t.x_cap, 0.0, 1.0});

  // Boundary segments (the cap line is handled separately).
  auto& b = t.boundary;
  b.push_back({-2.0, -2.0, -ell, ell});     // anchor left wall
  b.push_back({-2.0, 0.0, ell, ell});       // anchor top
  b.push_back({-2.0, 0.0, -ell, -ell});     // anchor bottom
  b.push_back({0.0, 0.0, -ell, 0.0});       // below the gate
  b.push_back({0.0, 0.0, ell, 1.0});        // gate slit
  b.push_back({0.0, t.x_cap, 1.0, 1.0});    // ceiling
  // Floor runs, each ending at the free tip of the sector's horizontal slit.
  double floor_from = 0.0;
  for (int i = 0; i < sector_count; ++i) {
    b.push_back({floor_from, t.xR3(i), 0.0, 0.0});
    floor_from = t.xR6(i);
  }
  b.push_back({floor_from, t.x_cap, 0.0, 0.0});
  for (int i = 0; i < sector_count; ++i) {
    double w = t.w3(i);
    b.push_back({t.xL4(i), t.xL4(i), -1.0, 0.0});          // shaft left wall
    b.push_back({t.xL4(i), t.xR6(i), -1.0, -1.0});         // sector bottom
    b.push_back({t.xR4(i), t.xR2(i), -w, -w});             // lower slit
    b.push_back({t.xR2(i), t.xR2(i), -w, 1.0});            // hanging wall
    b.push_back({t.xR6(i), t.xR6(i), -1.0, 0.0});          // riser right wall
  }

  validate_tract_raster(t);
  return t;
}

bool TractGeometry::contains(std::complex<double> z) const {
  double x = z.real(), y = z.imag();
  if (x >= x_cap) return false;  // at/beyond the truncation cap
  bool in_closed = false;
  for (const auto& r : rects) {
    if (x >= r.x0 && x <= r.x1 && y >= r.y0 && y <= r.y1) {
      in_closed = true;
      break;
    }
  }
  if (!in_closed) return false;
  for (const auto& s : boundary) {
    if (on_seg(s, x, y)) return false;
  }
  return true;
}

double TractGeometry::boundary_dist(std::complex<double> z) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& s : boundary) d = std::min(d, seg_dist(s, z.real(), z.imag()));
  return d;
}

std::vector<Channel> TractGeometry::channels_at(double s) const {
  if (!(s > x_min() && s < x_cap)) {
    throw GeometryError("channels_at: real part outside the tract extent");
  }
  // Nudge off rectangle edges; the cross-section is only sampled, never
  // evaluated exactly at a junction column.
  for (const auto& r : rects) {
    for (double e : {r.x0, r.x1}) {
      if (std::abs(s - e) < 1e-12 * std::max(1.0, std::abs(e))) {
        s = e + 1e-10 * std::max(1.0, std::abs(e));
      }
    }
  }

  struct Piece {
    double y0, y1;
    int rect;
  };
  std::vector<Piece> pieces;
  for (size_t k = 0; k < rects.size(); ++k) {
    if (rects[k].x0 < s && s < rects[k].x1) {
      pieces.push_back({rects[k].y0, rects[k].y1, static_cast<int>(k)});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.y0 < b.y0; });

  auto wall_at = [&](double y) {
    for (const auto& seg : boundary) {
      if (seg.y0 == seg.y1 && seg.y0 == y && seg.x0 <= s && s <= seg.x1) return true;
    }
    return false;
  };

  struct Group {
    double y0, y1;
    std::vector<int> rects;
  };
  std::vector<Group> groups;
  for (const auto& p : pieces) {
    if (!groups.empty() && p.y0 <= groups.back().y1 && !wall_at(p.y0)) {
      groups.back().y1 = std::max(groups.back().y1, p.y1);
      groups.back().rects.push_back(p.rect);
    } else {
      groups.push_back({p.y0, p.y1, {p.rect}});
    }
  }

  // Chain junction abscissas between consecutive rectangles.
  std::vector<double> junction(rects.size() > 0 ? rects.size() - 1 : 0);
  {
    size_t k = 0;
    junction[k++] = 0.0;  // anchor gate
    for (int i = 0; i < sectors; ++i) {
      junction[k++] = xR3(i);  // run into feeder
      junction[k++] = xR3(i);  // feeder into back channel
      junction[k++] = xR4(i);  // back channel into shaft
      junction[k++] = xR4(i);  // shaft into lower run
      junction[k++] = xR2(i);  // lower run into riser
      junction[k++] = xR6(i);  // riser into next run / stub
    }
  }

  std::vector<Channel> out;
  for (const auto& g : groups) {
    // Union-find over left/right parts of every rectangle, with the pieces
    // of this channel removed at column s.
    int n = static_cast<int>(rects.size());
    UnionFind uf(2 * n);
    auto node = [&](int k, bool right) { return 2 * k + (right ? 1 : 0); };
    for (int k = 0; k < n; ++k) {
      bool split = rects[k].x0 < s && s < rects[k].x1;
      bool cut = split && std::find(g.rects.begin(), g.rects.end(), k) != g.rects.end();
      if (!split || !cut) uf.unite(node(k, false), node(k, true));
    }
    for (int k = 0; k + 1 < n; ++k) {
      double xj = junction[k];
      uf.unite(node(k, xj > s), node(k + 1, xj > s));
    }
    Channel c;
    c.y0 = g.y0;
    c.y1 = g.y1;
    c.separating = !uf.same(node(0, false), node(n - 1, true));
    out.push_back(c);
  }
  return out;
}

double TractGeometry::cross_section_theta(double s) const {
  std::vector<Channel> ch = channels_at(s);
  if (ch.empty()) throw GeometryError("cross_section_theta: empty cross-section");
  if (ch.size() == 1) return ch[0].y1 - ch[0].y0;
  double lo = ch.front().y0, hi = ch.front().y1;
  for (const auto& c : ch) {
    lo = std::min(lo, c.y0);
    hi = std::max(hi, c.y1);
  }
  if (ch.size() == 2) return hi - lo;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : ch) {
    if (c.separating) best = std::min(best, c.y1 - c.y0);
  }
  return std::isfinite(best) ? best : hi - lo;
}

std::string TractGeometry::serialize() const {
  std::string out;
  char line[256];
  for (const auto& r : rects) {
    std::snprintf(line, sizeof(line), "%d %d %.17g %.17g %.17g %.17g\n", r.sector,
                  r.index, r.x0, r.x1, r.y0, r.y1);
    out += line;
  }
  return out;
}

ClearanceCurve clearance_curve(const TractGeometry& t) {
  ClearanceCurve c;
  double eps_min = *std::min_element(t.spec.eps.begin(), t.spec.eps.begin() + t.sectors);
  c.alpha = std::min(eps_min / 64.0, t.ell / 2.0);

  auto add = [&](double x, double y) { c.vertices.emplace_back(x, y); };
  double l = t.ell;
  add(-1.0, 0.0);
  add(-l / 2.0, 0.0);
  add(-l / 2.0, l / 2.0);
  add(l / 2.0, l / 2.0);
  add(l / 2.0, 0.5);
  for (int i = 0; i < t.sectors; ++i) {
    double e = t.eps(i), w = t.w3(i);
    double c2 = t.xR3(i) + e / 4.0;
    double c4 = t.xL4(i) + e / 16.0;
    double c6 = t.xR2(i) + e / 4.0;
    double y3 = -w / 2.0;
    double y5 = -(1.0 + w) / 2.0;
    add(c2, 0.5);
    add(c2, y3);
    add(c4, y3);
    add(c4, y5);
    add(c6, y5);
    add(c6, 0.5);
  }
  add(t.x_cap, 0.5);

  // K such that the length of the curve up to real part x <= t is <= K t;
  // meaningful for t >= 1 (the anchor traversal is a fixed prefix).
  double cum = 0.0, K = 0.0;
  for (size_t k = 1; k < c.vertices.size(); ++k) {
    cum += std::abs(c.vertices[k] - c.vertices[k - 1]);
    double x = c.vertices[k].real();
    if (x >= 1.0) K = std::max(K, cum / x);
  }
  c.length_bound_K = K;
  return c;
}

}  // namespace maxmod
