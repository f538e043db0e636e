#pragma once

#include <cstddef>
#include <vector>

#include "proxigraph/clustering.hpp"

namespace proxigraph {

/// The linkage table is a dense n x n matrix.
inline constexpr std::size_t kMaxLinkagePoints = 4000;

enum class Linkage { Single, Complete };

struct Merge {
  std::size_t a = 0;  // cluster ids: leaves 0..n-1, merge t creates id n + t
  std::size_t b = 0;
  double distance = 0.0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

struct Dendrogram {
  std::size_t leaves = 0;
  std::vector<Merge> merges;  // n - 1 merges, in order

  /// Clustering obtained by replaying the first n - target merges.
  Clustering cut(std::size_t target) const;
};

struct AgglomerativeResult {
  Clustering clustering;
  Dendrogram dendrogram;
};

/// Agglomerative clustering. Always records the full dendrogram; the returned
/// clustering is its cut at `target` clusters. Equal linkage distances merge
/// the lexicographically smallest (id, id) pair first.
AgglomerativeResult agglomerate(const PointSet& ps, Linkage linkage, std::size_t target);

}  // namespace proxigraph
