#pragma once

#include <optional>
#include <vector>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

/// Label of points assigned to no cluster.
inline constexpr int kNoise = -1;

/// Per-point labels in {0..cluster_count-1} or kNoise, with optional
/// per-cluster geometry (centroids or modes in `centers`, medoid indices in
/// `medoids`), both indexed by cluster id.
struct Clustering {
  std::vector<int> labels;
  int cluster_count = 0;
  std::optional<std::vector<Point2>> centers;
  std::optional<std::vector<Index>> medoids;

  std::size_t noise_count() const;
  /// Members of every cluster, ascending.
  std::vector<std::vector<Index>> members() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

/// Renumbers clusters by their smallest member index and permutes the
/// per-cluster vectors to match. Noise stays noise.
void renumber_by_first_member(Clustering& c);

}  // namespace proxigraph
