#pragma once

#include <cstddef>
#include <vector>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

/// Uniform bucket grid over a point set. Answers closed-disk range queries and
/// k-nearest queries with the same exact predicates and (distance, index)
/// ordering as the brute-force paths, so results are identical.
class GridIndex {
 public:
  explicit GridIndex(const PointSet& ps);

  /// Indices with |p - center| <= radius, ascending.
  std::vector<Index> within(const Point2& center, double radius) const;

  /// The k points nearest to point i (excluding i), ordered by distance then
  /// index. k is clamped to n - 1.
  std::vector<Index> k_nearest(Index i, std::size_t k) const;

  /// Visits every point whose bucket intersects the box.
  template <class Fn>
  void for_each_in_box(double min_x, double min_y, double max_x, double max_y, Fn&& fn) const {
    const long x0 = clamp_col(min_x) , x1 = clamp_col(max_x);
    const long y0 = clamp_row(min_y), y1 = clamp_row(max_y);
    for (long r = y0; r <= y1; ++r)
      for (long c = x0; c <= x1; ++c)
        for (Index i : bucket(c, r)) fn(i);
  }

 private:
  long col_of(double x) const;
  long row_of(double y) const;
  long clamp_col(double x) const;
  long clamp_row(double y) const;
  const std::vector<Index>& bucket(long c, long r) const {
    return cells_[static_cast<std::size_t>(r * cols_ + c)];
  }

  const PointSet* ps_;
  double min_x_ = 0, min_y_ = 0, cell_ = 1;
  long cols_ = 1, rows_ = 1;
  std::vector<std::vector<Index>> cells_;
};

/// Point count above which graph and clustering code switches from brute-force
/// neighbor scans to GridIndex queries.
inline constexpr std::size_t kGridThreshold = 1000;

/// Closed-disk neighborhoods {j != i : |p_i - p_j| <= radius} for every i,
/// each ascending. Uses the grid when n > kGridThreshold.
std::vector<std::vector<Index>> radius_neighborhoods(const PointSet& ps, double radius);
std::vector<std::vector<Index>> radius_neighborhoods_brute(const PointSet& ps, double radius);
std::vector<std::vector<Index>> radius_neighborhoods_grid(const PointSet& ps, double radius);

}  // namespace proxigraph
