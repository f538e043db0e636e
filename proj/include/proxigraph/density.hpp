#pragma once

#include <cstddef>
#include <vector>

#include "proxigraph/clustering.hpp"

namespace proxigraph {

inline constexpr std::size_t kDefaultMinPts = 3;
inline constexpr std::size_t kDefaultMeanShiftMaxIter = 300;

struct DbscanParams {
  double epsilon = 0.0;
  std::size_t min_pts = kDefaultMinPts;
};

struct HdbscanParams {
  std::size_t min_pts = kDefaultMinPts;
  std::size_t min_cluster_size = kDefaultMinPts;
};

struct MeanShiftParams {
  double bandwidth = 0.0;
  double merge_tol = 0.0;  // 0 selects bandwidth / 20
  std::size_t max_iter = kDefaultMeanShiftMaxIter;
};

/// DBSCAN with closed epsilon-neighborhoods and a self-inclusive MinPts count.
/// Clusters are discovered by scanning seeds in ascending index order; a
/// border point joins the first cluster that reaches it.
Clustering dbscan(const PointSet& ps, const DbscanParams& params);

/// One condensed-tree cluster, exposed for inspection and tests.
struct CondensedCluster {
  int parent = -1;  // -1 for the root
  double birth_lambda = 0.0;
  double stability = 0.0;
  std::vector<Index> points;  // every point present at birth
  bool selected = false;
};

struct HdbscanResult {
  Clustering clustering;
  std::vector<double> core_distances;
  /// Minimum spanning tree of the mutual-reachability graph as
  /// (a, b, weight), sorted by weight.
  struct WeightedEdge {
    Index a, b;
    double weight;
  };
  std::vector<WeightedEdge> mst;
  std::vector<CondensedCluster> condensed;  // index 0 is the root
};

/// Mutual-reachability distance max(core(a), core(b), |ab|).
double mutual_reachability(const PointSet& ps, const std::vector<double>& core, Index a, Index b);

/// HDBSCAN with Excess-of-Mass selection.
HdbscanResult hdbscan_detailed(const PointSet& ps, const HdbscanParams& params);
Clustering hdbscan(const PointSet& ps, const HdbscanParams& params);

/// Flat-kernel mean shift. Modes within merge_tol of each other (transitively)
/// form one cluster; centers hold the mode reached from each cluster's
/// lowest-index member.
Clustering mean_shift(const PointSet& ps, const MeanShiftParams& params);

/// Trajectory of a single seed under the flat kernel, starting at `start`.
std::vector<Point2> mean_shift_trajectory(const PointSet& ps, Point2 start, double bandwidth,
                                          double stop_shift, std::size_t max_iter);

}  // namespace proxigraph
