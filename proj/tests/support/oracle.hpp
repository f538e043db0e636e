#pragma once

// Definition-literal reference implementations used by the tests.
//
// All oracles run in integer arithmetic on coordinates scaled by kScale, so
// every input point must lie on the 1/kScale lattice (see random_points). They
// are deliberately slow and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "proxigraph/geometry.hpp"

namespace oracle {

using i64 = std::int64_t;
using i128 = __int128;
using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

inline constexpr double kScale = 1024.0;

struct IPoint {
  i64 x, y;
};

inline std::vector<IPoint> lattice(const proxigraph::PointSet& ps) {
  std::vector<IPoint> out;
  for (const auto& p : ps) {
    const double sx = p.x * kScale, sy = p.y * kScale;
    if (sx != std::floor(sx) || sy != std::floor(sy) || std::fabs(sx) > 0x1p40 || std::fabs(sy) > 0x1p40) {
      throw std::logic_error("oracle input is not on the lattice");
    }
    out.push_back({static_cast<i64>(sx), static_cast<i64>(sy)});
  }
  return out;
}

inline i64 d2(const IPoint& a, const IPoint& b) {
  const i64 dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline i128 orient(const IPoint& a, const IPoint& b, const IPoint& c) {
  return i128(b.x - a.x) * (c.y - a.y) - i128(b.y - a.y) * (c.x - a.x);
}

/// >0 when d is strictly inside the circumcircle of the counterclockwise a, b, c.
inline i128 in_circle(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
  const i128 ax = a.x - d.x, ay = a.y - d.y, bx = b.x - d.x, by = b.y - d.y;
  const i128 cx = c.x - d.x, cy = c.y - d.y;
  const i128 a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  // Terms stay below 2^127 for coordinates under 2^21.
  return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

inline std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

inline EdgeSet edge_set(const proxigraph::Graph& g) {
  return {g.edges().begin(), g.edges().end()};
}

/// Random distinct lattice points, coordinates uniform in [0, side].
inline proxigraph::PointSet random_points(std::mt19937_64& gen, std::size_t n, double side = 512.0) {
  std::uniform_int_distribution<i64> coord(0, static_cast<i64>(side * kScale));
  std::set<std::pair<i64, i64>> seen;
  std::vector<proxigraph::Point2> pts;
  while (pts.size() < n) {
    const i64 x = coord(gen), y = coord(gen);
    if (!seen.insert({x, y}).second) continue;
    pts.push_back({x / kScale, y / kScale});
  }
  return proxigraph::PointSet(std::move(pts));
}

/// Random distinct integer points in [0, side]²; small sides give many
/// collinear and cocircular subsets.
inline proxigraph::PointSet random_grid_points(std::mt19937_64& gen, std::size_t n, int side) {
  std::uniform_int_distribution<int> coord(0, side);
  std::set<std::pair<int, int>> seen;
  std::vector<proxigraph::Point2> pts;
  while (pts.size() < n) {
    const int x = coord(gen), y = coord(gen);
    if (seen.insert({x, y}).second) pts.push_back({double(x), double(y)});
  }
  return proxigraph::PointSet(std::move(pts));
}

/// True when no three points are collinear and no four cocircular.
inline bool general_position(const proxigraph::PointSet& ps) {
  const auto p = lattice(ps);
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const i128 o = orient(p[i], p[j], p[k]);
        if (o == 0) return false;
        for (std::size_t l = k + 1; l < n; ++l) {
          const i128 c = o > 0 ? in_circle(p[i], p[j], p[k], p[l]) : in_circle(p[i], p[k], p[j], p[l]);
          if (c == 0) return false;
        }
      }
  return true;
}

/// Position of q in p's neighbor order (0-based): the number of r != p with
/// (d(p,r), r) < (d(p,q), q).
inline std::size_t rank(const std::vector<IPoint>& pts, std::size_t p, std::size_t q) {
  std::size_t before = 0;
  const i64 dq = d2(pts[p], pts[q]);
  for (std::size_t r = 0; r < pts.size(); ++r) {
    if (r == p || r == q) continue;
    const i64 dr = d2(pts[p], pts[r]);
    if (dr < dq || (dr == dq && r < q)) ++before;
  }
  return before;
}

enum class Rel { Among, Exactly, Furthest };
enum class Combine { Or, And, Xor };

inline EdgeSet neighbor_graph(const proxigraph::PointSet& ps, Rel rel, std::size_t k, Combine how) {
  const auto pts = lattice(ps);
  const std::size_t n = pts.size();
  auto r = [&](std::size_t p, std::size_t q) {
    const std::size_t pos = rank(pts, p, q);
    switch (rel) {
      case Rel::Among: return pos < k;
      case Rel::Exactly: return pos + 1 == k;
      case Rel::Furthest: return pos == n - 2;
    }
    return false;
  };
  EdgeSet out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const bool a = r(p, q), b = r(q, p);
      const bool keep = how == Combine::Or ? (a || b) : how == Combine::And ? (a && b) : (a != b);
      if (keep) out.insert({p, q});
    }
  return out;
}

inline EdgeSet gabriel(const proxigraph::PointSet& ps) {
  const auto p = lattice(ps);
  EdgeSet out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      bool empty = true;
      for (std::size_t r = 0; r < p.size() && empty; ++r)
        if (r != i && r != j && d2(p[i], p[r]) + d2(p[j], p[r]) <= d2(p[i], p[j])) empty = false;
      if (empty) out.insert({i, j});
    }
  return out;
}

inline EdgeSet rng(const proxigraph::PointSet& ps) {
  const auto p = lattice(ps);
  EdgeSet out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      bool empty = true;
      const i64 dij = d2(p[i], p[j]);
      for (std::size_t r = 0; r < p.size() && empty; ++r)
        if (r != i && r != j && std::max(d2(p[i], p[r]), d2(p[j], p[r])) < dij) empty = false;
      if (empty) out.insert({i, j});
    }
  return out;
}

/// sqrt(a) <= sqrt(b) + sqrt(c) for non-negative integers.
inline bool sqrt_le_sum(i64 a, i64 b, i64 c) {
  const i128 lhs = i128(a) - b - c;  // a <= b + c + 2 sqrt(bc)
  if (lhs <= 0) return true;
  return lhs * lhs <= i128(4) * b * c;
}

inline EdgeSet soi(const proxigraph::PointSet& ps) {
  const auto p = lattice(ps);
  const std::size_t n = p.size();
  std::vector<i64> r2(n, INT64_MAX);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r2[i] = std::min(r2[i], d2(p[i], p[j]));
  EdgeSet out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sqrt_le_sum(d2(p[i], p[j]), r2[i], r2[j])) out.insert({i, j});
  return out;
}

/// epsilon must lie on the lattice.
inline EdgeSet epsilon(const proxigraph::PointSet& ps, double eps) {
  const auto p = lattice(ps);
  const i64 e = static_cast<i64>(eps * kScale);
  EdgeSet out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (d2(p[i], p[j]) <= e * e) out.insert({i, j});
  return out;
}

/// Triangles whose circumcircle has no other point inside or on it; in
/// general position these are exactly the Delaunay triangles.
inline std::vector<std::array<std::size_t, 3>> delaunay_triangles(const proxigraph::PointSet& ps) {
  const auto p = lattice(ps);
  const std::size_t n = p.size();
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const i128 o = orient(p[i], p[j], p[k]);
        if (o == 0) continue;
        std::array<std::size_t, 3> t = o > 0 ? std::array{i, j, k} : std::array{i, k, j};
        bool empty = true;
        for (std::size_t l = 0; l < n && empty; ++l)
          if (l != i && l != j && l != k && in_circle(p[t[0]], p[t[1]], p[t[2]], p[l]) >= 0) empty = false;
        if (empty) out.push_back(t);
      }
  return out;
}

inline EdgeSet delaunay(const proxigraph::PointSet& ps) {
  EdgeSet out;
  for (const auto& t : delaunay_triangles(ps))
    for (int e = 0; e < 3; ++e) out.insert(ordered(t[e], t[(e + 1) % 3]));
  return out;
}

inline EdgeSet urquhart(const proxigraph::PointSet& ps) {
  const auto p = lattice(ps);
  EdgeSet all = delaunay(ps), removed;
  for (const auto& t : delaunay_triangles(ps)) {
    std::pair<std::size_t, std::size_t> worst{};
    i64 worst_len = -1;
    for (int e = 0; e < 3; ++e) {
      const auto edge = ordered(t[e], t[(e + 1) % 3]);
      const i64 len = d2(p[edge.first], p[edge.second]);
      if (len > worst_len || (len == worst_len && edge < worst)) {
        worst = edge;
        worst_len = len;
      }
    }
    removed.insert(worst);
  }
  EdgeSet out;
  for (const auto& e : all)
    if (!removed.count(e)) out.insert(e);
  return out;
}

/// Kruskal over all pairs; equal lengths by index pair.
inline EdgeSet emst(const proxigraph::PointSet& ps) {
  const auto p = lattice(ps);
  const std::size_t n = p.size();
  std::vector<std::tuple<i64, std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(d2(p[i], p[j]), i, j);
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  EdgeSet out;
  for (const auto& [w, i, j] : all) {
    const std::size_t ci = comp[i], cj = comp[j];
    if (ci == cj) continue;
    for (auto& c : comp)
      if (c == cj) c = ci;
    out.insert({i, j});
  }
  return out;
}

/// Sector of direction (dx, dy) for half-open sectors of width 2π/s starting
/// at angle 0. Directions at multiples of π/4 (the only angles with rational
/// tangent that can meet a sector boundary) are placed exactly.
inline std::size_t yao_sector(i64 dx, i64 dy, std::size_t s) {
  int eighths = -1;  // angle as a multiple of π/4
  if (dy == 0) eighths = dx > 0 ? 0 : 4;
  else if (dx == 0) eighths = dy > 0 ? 2 : 6;
  else if (dx == dy) eighths = dx > 0 ? 1 : 5;
  else if (dx == -dy) eighths = dy > 0 ? 3 : 7;
  if (eighths >= 0) return static_cast<std::size_t>(eighths) * s / 8;
  const long double pi = 3.141592653589793238462643383279502884L;
  long double angle = std::atan2(static_cast<long double>(dy), static_cast<long double>(dx));
  if (angle < 0) angle += 2 * pi;
  return std::min<std::size_t>(static_cast<std::size_t>(angle * s / (2 * pi)), s - 1);
}

inline EdgeSet yao(const proxigraph::PointSet& ps, std::size_t s) {
  const auto p = lattice(ps);
  const std::size_t n = p.size();
  EdgeSet out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < s; ++m) {
      std::size_t best = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || yao_sector(p[j].x - p[i].x, p[j].y - p[i].y, s) != m) continue;
        if (best == n || d2(p[i], p[j]) < d2(p[i], p[best])) best = j;
      }
      if (best != n) out.insert(ordered(i, best));
    }
  return out;
}

/// Connected components of an edge set as a canonical partition.
inline std::vector<std::vector<std::size_t>> components(std::size_t n, const EdgeSet& edges) {
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  for (const auto& [a, b] : edges) {
    const std::size_t ca = comp[a], cb = comp[b];
    if (ca == cb) continue;
    for (auto& c : comp)
      if (c == cb) c = ca;
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (slot[comp[i]] < 0) {
      slot[comp[i]] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[comp[i]])].push_back(i);
  }
  return groups;
}

}  // namespace oracle
