#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "proxigraph/error.hpp"

namespace proxigraph {

using Index = std::size_t;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double squared_distance(const Point2& a, const Point2& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(const Point2& a, const Point2& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Ordered point list; the position of a point is its vertex identity.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point2> points);
  PointSet(std::initializer_list<Point2> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point2& operator[](Index i) const { return points_[i]; }
  std::span<const Point2> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  double distance(Index i, Index j) const { return proxigraph::distance(points_[i], points_[j]); }

  /// Index pair of the first coincident points (lexicographic order), if any.
  bool find_duplicate(Index& first, Index& second) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point2> points_;
};

/// Throws DuplicatePoints when two points coincide.
void require_distinct(const PointSet& ps);
/// Throws TooFewPoints when ps has fewer than `minimum` points.
void require_at_least(const PointSet& ps, std::size_t minimum);

using Edge = std::pair<Index, Index>;

/// Edge set over point indices. Undirected edges are normalized to (low, high);
/// the edge list is kept sorted and free of duplicates.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, bool directed = false) : n_(n), directed_(directed) {}
  Graph(std::size_t n, std::vector<Edge> edges, bool directed = false);

  std::size_t vertex_count() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool contains(Index a, Index b) const;

  /// Every edge of this graph is an edge of `other`.
  bool subset_of(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class EdgeBuilder;

  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
};

/// Collects edges and produces a normalized Graph.
class EdgeBuilder {
 public:
  explicit EdgeBuilder(std::size_t n, bool directed = false) : n_(n), directed_(directed) {}
  void add(Index a, Index b);
  Graph build() &&;

 private:
  std::size_t n_;
  bool directed_;
  std::vector<Edge> edges_;
};

}  // namespace proxigraph
