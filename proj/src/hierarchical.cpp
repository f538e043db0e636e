#include "proxigraph/hierarchical.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "proxigraph/union_find.hpp"

namespace proxigraph {

Clustering Dendrogram::cut(std::size_t target) const {
  Clustering c;
  if (leaves == 0) return c;
  DisjointSets sets(2 * leaves);
  const std::size_t replay = leaves - std::clamp<std::size_t>(target, 1, leaves);
  for (std::size_t t = 0; t < replay; ++t) {
    sets.unite(merges[t].a, leaves + t);
    sets.unite(merges[t].b, leaves + t);
  }
  std::vector<int> root_label(2 * leaves, -1);
  c.labels.resize(leaves);
  for (Index i = 0; i < leaves; ++i) {
    int& slot = root_label[sets.find(i)];
    if (slot < 0) slot = c.cluster_count++;
    c.labels[i] = slot;
  }
  return c;
}

namespace {

/// Pairwise linkage matrix over active clusters with per-row nearest
/// partners. Rows are slots; a merged cluster reuses the slot of its first
/// member, while ids (used for tie-breaking) follow dendrogram numbering.
class LinkageTable {
 public:
  LinkageTable(const PointSet& ps, Linkage linkage)
      : n_(ps.size()), linkage_(linkage), d_(n_ * n_), id_(n_), active_(n_, true), nn_(n_) {
    for (Index i = 0; i < n_; ++i) {
      id_[i] = i;
      for (Index j = 0; j < n_; ++j) d_[i * n_ + j] = ps.distance(i, j);
    }
    for (Index i = 0; i < n_; ++i) refresh(i);
  }

  Merge merge_next(std::size_t new_id) {
    Index s = n_;
    for (Index i = 0; i < n_; ++i) {
      if (!active_[i] || nn_[i] == n_) continue;
      if (s == n_ || key(i, nn_[i]) < key(s, nn_[s])) s = i;
    }
    const Index t = nn_[s];
    Merge m{std::min(id_[s], id_[t]), std::max(id_[s], id_[t]), at(s, t)};

    // s becomes the merged cluster; t retires.
    active_[t] = false;
    id_[s] = new_id;
    for (Index i = 0; i < n_; ++i) {
      if (!active_[i] || i == s) continue;
      const double v = linkage_ == Linkage::Single ? std::min(at(i, s), at(i, t))
                                                   : std::max(at(i, s), at(i, t));
      d_[i * n_ + s] = d_[s * n_ + i] = v;
    }
    for (Index i = 0; i < n_; ++i) {
      if (!active_[i] || i == s) continue;
      if (nn_[i] == s || nn_[i] == t) {
        refresh(i);
      } else if (nn_[i] == n_ || key(i, s) < key(i, nn_[i])) {
        nn_[i] = s;
      }
    }
    refresh(s);
    return m;
  }

 private:
  double at(Index i, Index j) const { return d_[i * n_ + j]; }

  std::tuple<double, std::size_t, std::size_t> key(Index i, Index j) const {
    return {at(i, j), std::min(id_[i], id_[j]), std::max(id_[i], id_[j])};
  }

  void refresh(Index i) {
    nn_[i] = n_;
    for (Index j = 0; j < n_; ++j) {
      if (j == i || !active_[j]) continue;
      if (nn_[i] == n_ || key(i, j) < key(i, nn_[i])) nn_[i] = j;
    }
  }

  std::size_t n_;
  Linkage linkage_;
  std::vector<double> d_;
  std::vector<std::size_t> id_;
  std::vector<bool> active_;
  std::vector<Index> nn_;
};

}  // namespace

AgglomerativeResult agglomerate(const PointSet& ps, Linkage linkage, std::size_t target) {
  require_at_least(ps, 1);
  require_distinct(ps);
  if (ps.size() > kMaxLinkagePoints) {
    throw Error(ErrorKind::TooManyPoints, "linkage clustering is limited to " +
                                              std::to_string(kMaxLinkagePoints) + " points");
  }
  if (target < 1 || target > ps.size()) {
    throw Error(ErrorKind::TargetOutOfRange, "target = " + std::to_string(target) +
                                                 " must lie in [1, " +
                                                 std::to_string(ps.size()) + "]");
  }
  AgglomerativeResult result;
  result.dendrogram.leaves = ps.size();
  LinkageTable table(ps, linkage);
  for (std::size_t t = 0; t + 1 < ps.size(); ++t) {
    result.dendrogram.merges.push_back(table.merge_next(ps.size() + t));
  }
  result.clustering = result.dendrogram.cut(target);
  return result;
}

}  // namespace proxigraph
