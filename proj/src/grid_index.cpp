#include "proxigraph/grid_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "proxigraph/predicates.hpp"

namespace proxigraph {

namespace {
constexpr long kMaxCells = 1L << 22;
}

GridIndex::GridIndex(const PointSet& ps) : ps_(&ps) {
  if (ps.empty()) {
    cells_.resize(1);
    return;
  }
  double max_x = ps[0].x, max_y = ps[0].y;
  min_x_ = ps[0].x;
  min_y_ = ps[0].y;
  for (const auto& p : ps) {
    min_x_ = std::min(min_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double w = max_x - min_x_;
  const double h = max_y - min_y_;
  const double n = static_cast<double>(ps.size());
  // Aim for about two points per cell.
  if (w > 0 && h > 0) {
    cell_ = std::sqrt(2.0 * w * h / n);
  } else {
    cell_ = std::max(w, h) * 2.0 / n;
  }
  if (!(cell_ > 0)) cell_ = 1.0;
  cols_ = static_cast<long>(std::floor(w / cell_)) + 1;
  rows_ = static_cast<long>(std::floor(h / cell_)) + 1;
  while (cols_ * rows_ > kMaxCells) {
    cell_ *= 2;
    cols_ = static_cast<long>(std::floor(w / cell_)) + 1;
    rows_ = static_cast<long>(std::floor(h / cell_)) + 1;
  }
  cells_.resize(static_cast<std::size_t>(cols_ * rows_));
  for (Index i = 0; i < ps.size(); ++i) {
    cells_[static_cast<std::size_t>(row_of(ps[i].y) * cols_ + col_of(ps[i].x))].push_back(i);
  }
}

long GridIndex::col_of(double x) const {
  return std::clamp(static_cast<long>(std::floor((x - min_x_) / cell_)), 0L, cols_ - 1);
}

long GridIndex::row_of(double y) const {
  return std::clamp(static_cast<long>(std::floor((y - min_y_) / cell_)), 0L, rows_ - 1);
}

long GridIndex::clamp_col(double x) const {
  const double c = std::floor((x - min_x_) / cell_);
  if (c < 0) return 0;
  if (c >= static_cast<double>(cols_)) return cols_ - 1;
  return static_cast<long>(c);
}

long GridIndex::clamp_row(double y) const {
  const double r = std::floor((y - min_y_) / cell_);
  if (r < 0) return 0;
  if (r >= static_cast<double>(rows_)) return rows_ - 1;
  return static_cast<long>(r);
}

std::vector<Index> GridIndex::within(const Point2& center, double radius) const {
  std::vector<Index> out;
  if (ps_->empty()) return out;
  const double pad = cell_;
  for_each_in_box(center.x - radius - pad, center.y - radius - pad, center.x + radius + pad,
                  center.y + radius + pad, [&](Index j) {
                    if (predicates::compare_to_radius(center, (*ps_)[j], radius) <= 0) {
                      out.push_back(j);
                    }
                  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> GridIndex::k_nearest(Index i, std::size_t k) const {
  const PointSet& ps = *ps_;
  const std::size_t n = ps.size();
  k = std::min(k, n - 1);
  std::vector<Index> candidates;
  if (k == 0) return candidates;

  const Point2& p = ps[i];
  const long pc = col_of(p.x);
  const long pr = row_of(p.y);
  const long max_ring = std::max({pc, cols_ - 1 - pc, pr, rows_ - 1 - pr});

  auto visit = [&](long c, long r) {
    if (c < 0 || r < 0 || c >= cols_ || r >= rows_) return;
    for (Index j : bucket(c, r))
      if (j != i) candidates.push_back(j);
  };
  auto kth_distance = [&]() {
    std::vector<double> d;
    d.reserve(candidates.size());
    for (Index j : candidates) d.push_back(squared_distance(p, ps[j]));
    std::nth_element(d.begin(), d.begin() + static_cast<long>(k - 1), d.end());
    return std::sqrt(d[k - 1]);
  };

  for (long ring = 0; ring <= max_ring; ++ring) {
    if (ring == 0) {
      visit(pc, pr);
    } else {
      for (long c = pc - ring; c <= pc + ring; ++c) {
        visit(c, pr - ring);
        visit(c, pr + ring);
      }
      for (long r = pr - ring + 1; r <= pr + ring - 1; ++r) {
        visit(pc - ring, r);
        visit(pc + ring, r);
      }
    }
    // Every unvisited point is at least ring * cell away from p.
    if (candidates.size() >= k && kth_distance() * (1.0 + 1e-9) < static_cast<double>(ring) * cell_) {
      break;
    }
  }

  std::sort(candidates.begin(), candidates.end(), [&](Index a, Index b) {
    const int s = predicates::compare_distance(p, ps[a], ps[b]);
    return s != 0 ? s < 0 : a < b;
  });
  candidates.resize(k);
  return candidates;
}

std::vector<std::vector<Index>> radius_neighborhoods_brute(const PointSet& ps, double radius) {
  std::vector<std::vector<Index>> out(ps.size());
  for (Index i = 0; i < ps.size(); ++i) {
    for (Index j = i + 1; j < ps.size(); ++j) {
      if (predicates::compare_to_radius(ps[i], ps[j], radius) <= 0) {
        out[i].push_back(j);
        out[j].push_back(i);
      }
    }
  }
  for (auto& row : out) std::sort(row.begin(), row.end());
  return out;
}

std::vector<std::vector<Index>> radius_neighborhoods_grid(const PointSet& ps, double radius) {
  GridIndex grid(ps);
  std::vector<std::vector<Index>> out(ps.size());
  for (Index i = 0; i < ps.size(); ++i) {
    auto hits = grid.within(ps[i], radius);
    hits.erase(std::remove(hits.begin(), hits.end(), i), hits.end());
    out[i] = std::move(hits);
  }
  return out;
}

std::vector<std::vector<Index>> radius_neighborhoods(const PointSet& ps, double radius) {
  return ps.size() > kGridThreshold ? radius_neighborhoods_grid(ps, radius)
                                    : radius_neighborhoods_brute(ps, radius);
}

}  // namespace proxigraph
