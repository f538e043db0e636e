#pragma once

#include <array>
#include <vector>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

using Triangle = std::array<Index, 3>;

/// Delaunay triangulation. Triangles are counterclockwise, rotated so the
/// smallest index comes first, and listed in ascending order.
struct Triangulation {
  std::vector<Triangle> triangles;
  Graph edges;
};

/// Delaunay triangulation with exact predicates. Cocircular configurations are
/// resolved by preferring, in every cocircular quadrilateral, the diagonal whose
/// sorted index pair is lexicographically smaller. All-collinear input yields
/// no triangles and the path joining the points in order along the line.
///
/// Requires n >= 3 and distinct points.
Triangulation delaunay(const PointSet& ps);

/// Euclidean minimum spanning tree; equal lengths are ordered by the
/// lexicographic index pair. Requires distinct points; n may be 0 or 1.
Graph emst(const PointSet& ps);

}  // namespace proxigraph
