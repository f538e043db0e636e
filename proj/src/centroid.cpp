#include "proxigraph/centroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace proxigraph {
namespace {

void validate(const PointSet& ps, std::size_t k, std::size_t max_iter) {
  require_at_least(ps, 1);
  require_distinct(ps);
  if (k < 1 || k > ps.size()) {
    throw Error(ErrorKind::KOutOfRange,
                "k = " + std::to_string(k) + " must lie in [1, " + std::to_string(ps.size()) + "]");
  }
  if (max_iter < 1) throw Error(ErrorKind::InvalidParameter, "max_iter must be at least 1");
}

std::vector<Index> distinct_uniform(std::size_t n, std::size_t k, SplitMix64& rng) {
  std::vector<Index> pool(n);
  std::iota(pool.begin(), pool.end(), Index{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::vector<Index> plus_plus(const PointSet& ps, std::size_t k, SplitMix64& rng) {
  const std::size_t n = ps.size();
  std::vector<Index> chosen{static_cast<Index>(rng.below(n))};
  std::vector<double> weight(n);
  for (Index i = 0; i < n; ++i) weight[i] = squared_distance(ps[i], ps[chosen[0]]);
  while (chosen.size() < k) {
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
    const double target = rng.unit() * total;
    double running = 0.0;
    Index pick = n;
    Index last_positive = n;
    for (Index i = 0; i < n; ++i) {
      if (weight[i] <= 0.0) continue;
      last_positive = i;
      running += weight[i];
      if (running > target) {
        pick = i;
        break;
      }
    }
    if (pick == n) pick = last_positive;
    chosen.push_back(pick);
    for (Index i = 0; i < n; ++i) weight[i] = std::min(weight[i], squared_distance(ps[i], ps[pick]));
  }
  return chosen;
}

template <class Metric>
int nearest_center(const Point2& p, const std::vector<Point2>& centers, Metric metric) {
  int best = 0;
  double best_d = metric(p, centers[0]);
  for (std::size_t c = 1; c < centers.size(); ++c) {
    const double d = metric(p, centers[c]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

std::vector<Point2> means(const PointSet& ps, const std::vector<int>& labels, std::size_t k) {
  std::vector<double> sx(k, 0.0), sy(k, 0.0);
  std::vector<std::size_t> count(k, 0);
  for (Index i = 0; i < ps.size(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    sx[c] += ps[i].x;
    sy[c] += ps[i].y;
    ++count[c];
  }
  std::vector<Point2> out(k);
  for (std::size_t c = 0; c < k; ++c) {
    const double m = static_cast<double>(count[c]);
    out[c] = {sx[c] / m, sy[c] / m};
  }
  return out;
}

/// Gives every empty cluster the point farthest from its current centroid,
/// taken from a cluster that keeps at least one member.
void repair_empty(const PointSet& ps, std::vector<int>& labels, const std::vector<Point2>& centers) {
  const std::size_t k = centers.size();
  std::vector<std::size_t> count(k, 0);
  for (int l : labels) ++count[static_cast<std::size_t>(l)];
  for (std::size_t c = 0; c < k; ++c) {
    if (count[c] > 0) continue;
    Index far = ps.size();
    double far_d = -1.0;
    for (Index i = 0; i < ps.size(); ++i) {
      const auto own = static_cast<std::size_t>(labels[i]);
      if (count[own] < 2) continue;
      const double d = squared_distance(ps[i], centers[own]);
      if (d > far_d) {
        far_d = d;
        far = i;
      }
    }
    --count[static_cast<std::size_t>(labels[far])];
    labels[far] = static_cast<int>(c);
    ++count[c];
  }
}

}  // namespace

std::vector<Index> kmeans_seeds(const PointSet& ps, std::size_t k, KMeansInit init,
                                SplitMix64& rng) {
  return init == KMeansInit::PlusPlus ? plus_plus(ps, k, rng) : distinct_uniform(ps.size(), k, rng);
}

double kmeans_cost(const PointSet& ps, const Clustering& c) {
  double total = 0.0;
  for (const auto& members : c.members()) {
    if (members.empty()) continue;
    const Point2& center = (*c.centers)[static_cast<std::size_t>(c.labels[members.front()])];
    double s = 0.0;
    for (Index i : members) s += squared_distance(ps[i], center);
    total += s;
  }
  return total;
}

double kmedoids_cost(const PointSet& ps, const Clustering& c) {
  double total = 0.0;
  for (const auto& members : c.members()) {
    if (members.empty()) continue;
    const Index medoid = (*c.medoids)[static_cast<std::size_t>(c.labels[members.front()])];
    double s = 0.0;
    for (Index i : members) s += ps.distance(i, medoid);
    total += s;
  }
  return total;
}

CentroidResult kmeans(const PointSet& ps, const KMeansOptions& options) {
  validate(ps, options.k, options.max_iter);
  const std::size_t n = ps.size();
  const std::size_t k = options.k;

  SplitMix64 rng(options.seed);
  std::vector<Point2> centers;
  for (Index i : kmeans_seeds(ps, k, options.init, rng)) centers.push_back(ps[i]);

  CentroidResult result;
  Clustering& c = result.clustering;
  c.cluster_count = static_cast<int>(k);
  std::vector<int> previous;
  for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
    std::vector<int> labels(n);
    for (Index i = 0; i < n; ++i) labels[i] = nearest_center(ps[i], centers, squared_distance);
    repair_empty(ps, labels, centers);
    centers = means(ps, labels, k);
    c.labels = labels;
    c.centers = centers;
    result.cost_history.push_back(kmeans_cost(ps, c));
    result.iterations = iter + 1;
    if (labels == previous) break;
    previous = std::move(labels);
  }
  renumber_by_first_member(c);
  return result;
}

CentroidResult kmedoids(const PointSet& ps, const KMedoidsOptions& options) {
  validate(ps, options.k, options.max_iter);
  const std::size_t n = ps.size();
  const std::size_t k = options.k;

  SplitMix64 rng(options.seed);
  std::vector<Index> medoids = distinct_uniform(n, k, rng);

  CentroidResult result;
  Clustering& c = result.clustering;
  c.cluster_count = static_cast<int>(k);
  for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
    std::vector<Point2> at(k);
    for (std::size_t m = 0; m < k; ++m) at[m] = ps[medoids[m]];
    c.labels.assign(n, 0);
    for (Index i = 0; i < n; ++i) c.labels[i] = nearest_center(ps[i], at, squared_distance);

    bool changed = false;
    const auto groups = c.members();
    for (std::size_t m = 0; m < k; ++m) {
      auto sum_from = [&](Index candidate) {
        double s = 0.0;
        for (Index j : groups[m]) s += ps.distance(candidate, j);
        return s;
      };
      Index best = medoids[m];
      double best_sum = sum_from(best);
      for (Index candidate : groups[m]) {
        const double s = sum_from(candidate);
        if (s < best_sum) {
          best_sum = s;
          best = candidate;
        }
      }
      if (best != medoids[m]) {
        medoids[m] = best;
        changed = true;
      }
    }
    c.medoids = medoids;
    result.cost_history.push_back(kmedoids_cost(ps, c));
    result.iterations = iter + 1;
    if (!changed) break;
  }
  std::vector<Point2> centers;
  for (Index m : *c.medoids) centers.push_back(ps[m]);
  c.centers = std::move(centers);
  renumber_by_first_member(c);
  return result;
}

}  // namespace proxigraph
