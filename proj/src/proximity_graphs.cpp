#include "proxigraph/proximity_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "proxigraph/delaunay.hpp"
#include "proxigraph/grid_index.hpp"
#include "proxigraph/neighbor_order.hpp"
#include "proxigraph/predicates.hpp"

namespace proxigraph {
namespace {

namespace pr = predicates;

void validate(const PointSet& ps) {
  require_at_least(ps, 2);
  require_distinct(ps);
}

/// Iterates over points that might lie in an axis-aligned box: all points for
/// small inputs, grid buckets otherwise.
class BoxScan {
 public:
  explicit BoxScan(const PointSet& ps) : ps_(ps) {
    if (ps.size() > kGridThreshold) grid_.emplace(ps);
  }

  template <class Fn>
  void operator()(double min_x, double min_y, double max_x, double max_y, Fn&& fn) const {
    if (grid_) {
      grid_->for_each_in_box(min_x, min_y, max_x, max_y, fn);
    } else {
      for (Index i = 0; i < ps_.size(); ++i) fn(i);
    }
  }

 private:
  const PointSet& ps_;
  std::optional<GridIndex> grid_;
};

/// Candidate edges for the empty-region graphs, all of which are Delaunay.
std::vector<Edge> delaunay_edges(const PointSet& ps) {
  if (ps.size() == 2) return {{0, 1}};
  return delaunay(ps).edges.edges();
}

/// Keeps candidate (p, q) unless some third point r inside the box returned
/// by `region(p, q)` satisfies `blocks(p, q, r)`.
template <class Region, class Blocks>
Graph filter_empty(const PointSet& ps, Region region, Blocks blocks) {
  BoxScan scan(ps);
  EdgeBuilder out(ps.size());
  for (const auto& [p, q] : delaunay_edges(ps)) {
    const auto [x0, y0, x1, y1] = region(ps[p], ps[q]);
    bool blocked = false;
    scan(x0, y0, x1, y1, [&](Index r) {
      if (!blocked && r != p && r != q && blocks(ps[p], ps[q], ps[r])) blocked = true;
    });
    if (!blocked) out.add(p, q);
  }
  return std::move(out).build();
}

struct Box {
  double x0, y0, x1, y1;
};

Box padded(double x0, double y0, double x1, double y1) {
  const double pad = 1e-9 * (std::abs(x0) + std::abs(x1) + std::abs(y0) + std::abs(y1) + 1.0);
  return {x0 - pad, y0 - pad, x1 + pad, y1 + pad};
}

}  // namespace

Graph gabriel_graph(const PointSet& ps) {
  validate(ps);
  return filter_empty(
      ps,
      [](const Point2& p, const Point2& q) {
        const double cx = 0.5 * (p.x + q.x), cy = 0.5 * (p.y + q.y);
        const double r = 0.5 * distance(p, q);
        const Box b = padded(cx - r, cy - r, cx + r, cy + r);
        return std::array{b.x0, b.y0, b.x1, b.y1};
      },
      [](const Point2& p, const Point2& q, const Point2& r) {
        return pr::diametral_sign(p, q, r) <= 0;
      });
}

Graph rng_graph(const PointSet& ps) {
  validate(ps);
  return filter_empty(
      ps,
      [](const Point2& p, const Point2& q) {
        const double d = distance(p, q);
        const Box b = padded(std::max(p.x, q.x) - d, std::max(p.y, q.y) - d,
                             std::min(p.x, q.x) + d, std::min(p.y, q.y) + d);
        return std::array{b.x0, b.y0, b.x1, b.y1};
      },
      [](const Point2& p, const Point2& q, const Point2& r) {
        return pr::compare_lengths(p, r, p, q) < 0 && pr::compare_lengths(q, r, p, q) < 0;
      });
}

Graph soi_graph(const PointSet& ps) {
  validate(ps);
  const std::size_t n = ps.size();
  const NeighborOrder nearest = nearest_rows(ps, 1);
  std::vector<double> radius(n);
  for (Index i = 0; i < n; ++i) radius[i] = ps.distance(i, nearest.kth(i, 1));
  const double max_radius = *std::max_element(radius.begin(), radius.end());

  auto overlaps = [&](Index i, Index j) {
    return pr::compare_to_length_sum(ps[i], ps[j], ps[nearest.kth(i, 1)],
                                     ps[nearest.kth(j, 1)]) <= 0;
  };

  EdgeBuilder out(n);
  if (n > kGridThreshold) {
    GridIndex grid(ps);
    for (Index i = 0; i < n; ++i) {
      const double reach = radius[i] + max_radius;
      const Box b = padded(ps[i].x - reach, ps[i].y - reach, ps[i].x + reach, ps[i].y + reach);
      grid.for_each_in_box(b.x0, b.y0, b.x1, b.y1, [&](Index j) {
        if (j > i && overlaps(i, j)) out.add(i, j);
      });
    }
  } else {
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (overlaps(i, j)) out.add(i, j);
  }
  return std::move(out).build();
}

Graph epsilon_graph(const PointSet& ps, double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::NonpositiveEpsilon, "epsilon must be a positive finite number");
  }
  require_at_least(ps, 1);
  require_distinct(ps);
  const auto hoods = radius_neighborhoods(ps, epsilon);
  EdgeBuilder out(ps.size());
  for (Index i = 0; i < ps.size(); ++i)
    for (Index j : hoods[i])
      if (j > i) out.add(i, j);
  return std::move(out).build();
}

Graph urquhart_graph(const PointSet& ps) {
  validate(ps);
  if (ps.size() == 2) return Graph(2, {{0, 1}});
  const Triangulation dt = delaunay(ps);
  auto longer = [&](const Edge& e, const Edge& f) {
    const int s = pr::compare_lengths(ps[e.first], ps[e.second], ps[f.first], ps[f.second]);
    return s != 0 ? s > 0 : e < f;
  };
  std::vector<Edge> removed;
  for (const auto& t : dt.triangles) {
    std::array<Edge, 3> sides{std::minmax(t[0], t[1]), std::minmax(t[1], t[2]),
                              std::minmax(t[2], t[0])};
    removed.push_back(*std::min_element(sides.begin(), sides.end(), longer));
  }
  std::sort(removed.begin(), removed.end());
  EdgeBuilder out(ps.size());
  for (const auto& e : dt.edges.edges())
    if (!std::binary_search(removed.begin(), removed.end(), e)) out.add(e.first, e.second);
  return std::move(out).build();
}

std::size_t yao_sector(double dx, double dy, std::size_t sectors, double offset) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  if (offset == 0.0) {
    // Directions along an axis or a diagonal are the only ones that can sit
    // exactly on a sector boundary; place them by their exact angle k·π/4.
    int eighths = -1;
    if (dy == 0) eighths = dx > 0 ? 0 : 4;
    else if (dx == 0) eighths = dy > 0 ? 2 : 6;
    else if (dx == dy) eighths = dx > 0 ? 1 : 5;
    else if (dx == -dy) eighths = dy > 0 ? 3 : 7;
    if (eighths >= 0) return static_cast<std::size_t>(eighths) * sectors / 8;
  }

  double angle = std::fmod(std::atan2(dy, dx) - offset, kTwoPi);
  if (angle < 0) angle += kTwoPi;
  const auto m = static_cast<std::size_t>(std::floor(angle * static_cast<double>(sectors) / kTwoPi));
  return std::min(m, sectors - 1);
}

Graph yao_graph(const PointSet& ps, std::size_t sectors, double offset) {
  if (sectors < 1) throw Error(ErrorKind::BadSectorCount, "sectors must be at least 1");
  if (!std::isfinite(offset)) throw Error(ErrorKind::InvalidParameter, "offset must be finite");
  validate(ps);
  const std::size_t n = ps.size();
  constexpr Index kUnset = static_cast<Index>(-1);
  EdgeBuilder out(n);
  std::vector<Index> best(sectors);
  for (Index p = 0; p < n; ++p) {
    std::fill(best.begin(), best.end(), kUnset);
    for (Index q = 0; q < n; ++q) {
      if (q == p) continue;
      const std::size_t s = yao_sector(ps[q].x - ps[p].x, ps[q].y - ps[p].y, sectors, offset);
      if (best[s] == kUnset || closer_to(ps, p, q, best[s])) best[s] = q;
    }
    for (Index q : best)
      if (q != kUnset) out.add(p, q);
  }
  return std::move(out).build();
}

}  // namespace proxigraph
