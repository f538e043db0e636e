#pragma once

#include <cstddef>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

/// Default epsilon and Yao sector count offered by the front ends.
inline constexpr double kSuggestedEpsilon = 28.0;
inline constexpr std::size_t kDefaultYaoSectors = 5;

/// {p, q} iff no other point lies in the closed disk with diameter pq.
Graph gabriel_graph(const PointSet& ps);

/// {p, q} iff no other point r has max(|pr|, |qr|) < |pq| (open lune).
Graph rng_graph(const PointSet& ps);

/// Sphere-of-influence graph: {i, j} iff |ij| <= r_i + r_j, where r_i is the
/// distance from i to its nearest neighbor.
Graph soi_graph(const PointSet& ps);

/// {p, q} iff |pq| <= epsilon. Throws NonpositiveEpsilon unless epsilon > 0.
Graph epsilon_graph(const PointSet& ps, double epsilon);

/// Delaunay edges minus, for every triangle, its longest edge (equal lengths:
/// the smallest index pair).
Graph urquhart_graph(const PointSet& ps);

/// Yao graph: each point connects to its closest point (ties by index) in
/// each of `sectors` half-open angular sectors [2πm/s, 2π(m+1)/s) measured
/// counterclockwise from the direction at angle `offset` (radians). Arcs are
/// symmetrized by OR.
Graph yao_graph(const PointSet& ps, std::size_t sectors, double offset = 0.0);

/// Sector of direction (dx, dy) under the yao_graph convention.
std::size_t yao_sector(double dx, double dy, std::size_t sectors, double offset = 0.0);

}  // namespace proxigraph
