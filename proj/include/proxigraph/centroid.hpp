#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "proxigraph/clustering.hpp"
#include "proxigraph/rng.hpp"

namespace proxigraph {

enum class KMeansInit { Uniform, PlusPlus };

inline constexpr std::size_t kDefaultCentroidMaxIter = 100;

struct KMeansOptions {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  KMeansInit init = KMeansInit::Uniform;
  std::size_t max_iter = kDefaultCentroidMaxIter;
};

struct KMedoidsOptions {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t max_iter = kDefaultCentroidMaxIter;
};

struct CentroidResult {
  Clustering clustering;
  /// Objective after each iteration: within-cluster squared distance for
  /// k-means, total point-to-medoid distance for k-medoids.
  std::vector<double> cost_history;
  std::size_t iterations = 0;
};

/// Initial centroid indices: k distinct uniform draws, or k-means++ D^2
/// sampling (points at distance zero from the chosen set are never drawn).
std::vector<Index> kmeans_seeds(const PointSet& ps, std::size_t k, KMeansInit init,
                                SplitMix64& rng);

/// Lloyd iterations until the labels stop changing or max_iter is reached.
/// Assignment ties go to the lowest centroid index; a cluster left empty by
/// assignment takes the point farthest from its own centroid.
CentroidResult kmeans(const PointSet& ps, const KMeansOptions& options);

/// Alternating k-medoids: assign to the nearest medoid, then move each medoid
/// to the member with the smallest distance sum when that strictly improves.
CentroidResult kmedoids(const PointSet& ps, const KMedoidsOptions& options);

double kmeans_cost(const PointSet& ps, const Clustering& c);
double kmedoids_cost(const PointSet& ps, const Clustering& c);

}  // namespace proxigraph
