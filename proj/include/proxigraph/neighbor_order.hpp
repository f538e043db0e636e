#pragma once

#include <span>
#include <vector>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

/// For each point, the other point indices sorted by distance, equal distances
/// broken by ascending index. Rows may be truncated to a prefix (see
/// nearest_rows); a full order has rows of length n - 1.
class NeighborOrder {
 public:
  NeighborOrder() = default;
  explicit NeighborOrder(std::vector<std::vector<Index>> rows) : rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  std::span<const Index> row(Index i) const { return rows_[i]; }

  /// The k-th nearest neighbor of i (k is 1-based).
  Index kth(Index i, std::size_t k) const { return rows_[i][k - 1]; }

  friend bool operator==(const NeighborOrder&, const NeighborOrder&) = default;

 private:
  std::vector<std::vector<Index>> rows_;
};

/// Full neighbor order. Requires n >= 2 and distinct points.
NeighborOrder neighbor_order(const PointSet& ps);

/// First k entries of every row of neighbor_order(ps), computed without the
/// full sort. Uses the grid index when n exceeds kGridThreshold.
NeighborOrder nearest_rows(const PointSet& ps, std::size_t k);
NeighborOrder nearest_rows_brute(const PointSet& ps, std::size_t k);
NeighborOrder nearest_rows_grid(const PointSet& ps, std::size_t k);

/// Last entry of every row of neighbor_order(ps).
std::vector<Index> furthest_neighbors(const PointSet& ps);

/// Strict weak order of j by (distance from p, index).
bool closer_to(const PointSet& ps, Index p, Index a, Index b);

}  // namespace proxigraph
