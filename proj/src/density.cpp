#include "proxigraph/density.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <string>

#include "proxigraph/grid_index.hpp"
#include "proxigraph/neighbor_order.hpp"
#include "proxigraph/predicates.hpp"
#include "proxigraph/union_find.hpp"

namespace proxigraph {
namespace {

void require_positive(double value, const char* name, ErrorKind kind) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw Error(kind, std::string(name) + " must be a positive finite number");
  }
}

void require_count(std::size_t value, std::size_t minimum, const char* name) {
  if (value < minimum) {
    throw Error(ErrorKind::InvalidParameter,
                std::string(name) + " must be at least " + std::to_string(minimum));
  }
}

}  // namespace

// ---------------------------------------------------------------- DBSCAN

Clustering dbscan(const PointSet& ps, const DbscanParams& params) {
  require_positive(params.epsilon, "epsilon", ErrorKind::NonpositiveEpsilon);
  require_count(params.min_pts, 1, "min_pts");
  require_at_least(ps, 1);
  require_distinct(ps);

  const std::size_t n = ps.size();
  const auto hoods = radius_neighborhoods(ps, params.epsilon);
  std::vector<bool> core(n);
  for (Index i = 0; i < n; ++i) core[i] = hoods[i].size() + 1 >= params.min_pts;

  Clustering c;
  c.labels.assign(n, kNoise);
  for (Index seed = 0; seed < n; ++seed) {
    if (c.labels[seed] != kNoise || !core[seed]) continue;
    const int id = c.cluster_count++;
    c.labels[seed] = id;
    std::deque<Index> queue{seed};
    while (!queue.empty()) {
      const Index p = queue.front();
      queue.pop_front();
      for (Index q : hoods[p]) {
        if (c.labels[q] != kNoise) continue;
        c.labels[q] = id;
        if (core[q]) queue.push_back(q);
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- HDBSCAN

double mutual_reachability(const PointSet& ps, const std::vector<double>& core, Index a, Index b) {
  return std::max({core[a], core[b], ps.distance(a, b)});
}

namespace {

std::vector<double> core_distances(const PointSet& ps, std::size_t min_pts) {
  const std::size_t n = ps.size();
  std::vector<double> core(n, 0.0);
  // The point itself counts toward min_pts.
  const std::size_t k = std::min(min_pts - 1, n - 1);
  if (k == 0) return core;
  const NeighborOrder rows = nearest_rows(ps, k);
  for (Index i = 0; i < n; ++i) core[i] = ps.distance(i, rows.kth(i, k));
  return core;
}

/// Dense Prim over the complete mutual-reachability graph.
std::vector<HdbscanResult::WeightedEdge> reachability_mst(const PointSet& ps,
                                                          const std::vector<double>& core) {
  const std::size_t n = ps.size();
  std::vector<HdbscanResult::WeightedEdge> edges;
  if (n < 2) return edges;
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<Index> from(n, 0);
  Index current = 0;
  in_tree[0] = true;
  for (std::size_t added = 1; added < n; ++added) {
    Index next = n;
    for (Index j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double d = mutual_reachability(ps, core, current, j);
      if (d < best[j]) {
        best[j] = d;
        from[j] = current;
      }
      if (next == n || best[j] < best[next]) next = j;
    }
    in_tree[next] = true;
    edges.push_back({std::min(from[next], next), std::max(from[next], next), best[next]});
    current = next;
  }
  std::sort(edges.begin(), edges.end(), [](const auto& e, const auto& f) {
    return std::tie(e.weight, e.a, e.b) < std::tie(f.weight, f.a, f.b);
  });
  return edges;
}

struct LinkageNode {
  std::size_t left = 0, right = 0;
  double distance = 0.0;
  std::size_t size = 1;
};

class CondensedTreeBuilder {
 public:
  CondensedTreeBuilder(std::size_t n, std::vector<LinkageNode> nodes, std::size_t min_cluster_size)
      : n_(n), nodes_(std::move(nodes)), min_size_(min_cluster_size) {}

  std::vector<CondensedCluster> build() {
    clusters_.push_back(CondensedCluster{});
    clusters_[0].points = leaves_of(nodes_.size() - 1);
    std::vector<std::pair<std::size_t, int>> stack{{nodes_.size() - 1, 0}};
    while (!stack.empty()) {
      auto [node, cluster] = stack.back();
      stack.pop_back();
      const LinkageNode& split = nodes_[node];
      const double lambda = 1.0 / split.distance;
      const std::size_t left = split.left, right = split.right;
      const bool big_left = nodes_[left].size >= min_size_;
      const bool big_right = nodes_[right].size >= min_size_;
      auto& owner = clusters_[static_cast<std::size_t>(cluster)];
      // Every point of this node leaves `cluster` here, either as noise or
      // into a child cluster, unless one side carries the cluster on.
      if (big_left && big_right) {
        owner.stability += static_cast<double>(split.size) * (lambda - owner.birth_lambda);
        stack.emplace_back(right, spawn(cluster, right, lambda));
        stack.emplace_back(left, spawn(cluster, left, lambda));
      } else if (big_left || big_right) {
        const std::size_t big = big_left ? left : right;
        const std::size_t small = big_left ? right : left;
        owner.stability += static_cast<double>(nodes_[small].size) * (lambda - owner.birth_lambda);
        if (cluster == 0) {
          // The root stands for the whole input; the component that survives
          // its first shedding becomes a proper cluster.
          owner.stability += static_cast<double>(nodes_[big].size) * (lambda - owner.birth_lambda);
          stack.emplace_back(big, spawn(cluster, big, lambda));
        } else {
          stack.emplace_back(big, cluster);
        }
      } else {
        owner.stability += static_cast<double>(split.size) * (lambda - owner.birth_lambda);
      }
    }
    return std::move(clusters_);
  }

 private:
  int spawn(int parent, std::size_t node, double lambda) {
    CondensedCluster c;
    c.parent = parent;
    c.birth_lambda = lambda;
    c.points = leaves_of(node);
    clusters_.push_back(std::move(c));
    return static_cast<int>(clusters_.size() - 1);
  }

  std::vector<Index> leaves_of(std::size_t node) const {
    std::vector<Index> out;
    std::vector<std::size_t> stack{node};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (v < n_) {
        out.push_back(v);
      } else {
        stack.push_back(nodes_[v].left);
        stack.push_back(nodes_[v].right);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t n_;
  std::vector<LinkageNode> nodes_;
  std::size_t min_size_;
  std::vector<CondensedCluster> clusters_;
};

/// Excess of Mass: bottom-up, a non-root cluster is selected when its
/// stability exceeds the total of the best selection beneath it.
void select_clusters(std::vector<CondensedCluster>& clusters) {
  const std::size_t m = clusters.size();
  std::vector<double> below(m, 0.0);
  std::vector<double> best(m, 0.0);
  // Children are always created after their parent.
  for (std::size_t c = m; c-- > 1;) {
    if (clusters[c].stability > below[c]) {
      clusters[c].selected = true;
      best[c] = clusters[c].stability;
    } else {
      best[c] = below[c];
    }
    below[static_cast<std::size_t>(clusters[c].parent)] += best[c];
  }
  // Keep only the topmost selected cluster on every root-to-leaf path.
  for (std::size_t c = 1; c < m; ++c) {
    for (int a = clusters[c].parent; a > 0; a = clusters[static_cast<std::size_t>(a)].parent) {
      if (clusters[static_cast<std::size_t>(a)].selected) {
        clusters[c].selected = false;
        break;
      }
    }
  }
}

}  // namespace

HdbscanResult hdbscan_detailed(const PointSet& ps, const HdbscanParams& params) {
  require_count(params.min_pts, 1, "min_pts");
  require_count(params.min_cluster_size, 2, "min_cluster_size");
  require_at_least(ps, 1);
  require_distinct(ps);

  const std::size_t n = ps.size();
  HdbscanResult result;
  result.clustering.labels.assign(n, kNoise);
  if (n < 2) return result;

  result.core_distances = core_distances(ps, params.min_pts);
  result.mst = reachability_mst(ps, result.core_distances);
  if (n < params.min_cluster_size) return result;

  std::vector<LinkageNode> nodes(n);
  std::vector<std::size_t> top(n);
  for (Index i = 0; i < n; ++i) top[i] = i;
  DisjointSets sets(n);
  for (const auto& e : result.mst) {
    const std::size_t ra = sets.find(e.a), rb = sets.find(e.b);
    LinkageNode node{top[ra], top[rb], e.weight, nodes[top[ra]].size + nodes[top[rb]].size};
    nodes.push_back(node);
    sets.unite(ra, rb);
    top[sets.find(ra)] = nodes.size() - 1;
  }

  result.condensed = CondensedTreeBuilder(n, std::move(nodes), params.min_cluster_size).build();
  select_clusters(result.condensed);

  Clustering& c = result.clustering;
  for (const auto& cluster : result.condensed) {
    if (!cluster.selected) continue;
    const int id = c.cluster_count++;
    for (Index p : cluster.points) c.labels[p] = id;
  }
  renumber_by_first_member(c);
  return result;
}

Clustering hdbscan(const PointSet& ps, const HdbscanParams& params) {
  return hdbscan_detailed(ps, params).clustering;
}

// ---------------------------------------------------------------- Mean shift

namespace {

template <class Window>
std::vector<Point2> shift_path(const PointSet& ps, Point2 x, double stop_shift,
                               std::size_t max_iter, Window&& window) {
  std::vector<Point2> path{x};
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double sx = 0.0, sy = 0.0;
    std::size_t count = 0;
    window(x, [&](Index j) {
      sx += ps[j].x;
      sy += ps[j].y;
      ++count;
    });
    if (count == 0) break;
    const Point2 mean{sx / static_cast<double>(count), sy / static_cast<double>(count)};
    const double shift = distance(mean, x);
    x = mean;
    path.push_back(x);
    if (shift < stop_shift) break;
  }
  return path;
}

}  // namespace

std::vector<Point2> mean_shift_trajectory(const PointSet& ps, Point2 start, double bandwidth,
                                          double stop_shift, std::size_t max_iter) {
  return shift_path(ps, start, stop_shift, max_iter, [&](const Point2& x, auto&& visit) {
    for (Index j = 0; j < ps.size(); ++j)
      if (predicates::compare_to_radius(x, ps[j], bandwidth) <= 0) visit(j);
  });
}

Clustering mean_shift(const PointSet& ps, const MeanShiftParams& params) {
  require_positive(params.bandwidth, "bandwidth", ErrorKind::InvalidParameter);
  const double merge_tol = params.merge_tol == 0.0 ? params.bandwidth / 20.0 : params.merge_tol;
  require_positive(merge_tol, "merge_tol", ErrorKind::InvalidParameter);
  require_count(params.max_iter, 1, "max_iter");
  require_at_least(ps, 1);
  require_distinct(ps);

  const std::size_t n = ps.size();
  const double stop_shift = merge_tol / 10.0;
  std::optional<GridIndex> grid;
  if (n > kGridThreshold) grid.emplace(ps);

  std::vector<Point2> modes(n);
  for (Index i = 0; i < n; ++i) {
    if (grid) {
      modes[i] = shift_path(ps, ps[i], stop_shift, params.max_iter,
                            [&](const Point2& x, auto&& visit) {
                              for (Index j : grid->within(x, params.bandwidth)) visit(j);
                            })
                     .back();
    } else {
      modes[i] = mean_shift_trajectory(ps, ps[i], params.bandwidth, stop_shift, params.max_iter)
                     .back();
    }
  }

  const PointSet mode_set(modes);
  const auto close = radius_neighborhoods(mode_set, merge_tol);
  DisjointSets sets(n);
  for (Index i = 0; i < n; ++i)
    for (Index j : close[i]) sets.unite(i, j);

  Clustering c;
  c.labels.assign(n, kNoise);
  c.centers.emplace();
  std::vector<int> root_label(n, -1);
  for (Index i = 0; i < n; ++i) {
    int& slot = root_label[sets.find(i)];
    if (slot < 0) {
      slot = c.cluster_count++;
      c.centers->push_back(modes[i]);
    }
    c.labels[i] = slot;
  }
  return c;
}

}  // namespace proxigraph
