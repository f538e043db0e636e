#include "proxigraph/neighbor_graphs.hpp"

#include <algorithm>
#include <string>

#include "proxigraph/neighbor_order.hpp"

namespace proxigraph {

NeighborVariant::NeighborVariant(NeighborKind kind, std::optional<std::size_t> k)
    : kind_(kind), k_(k) {
  if (takes_k(kind) && !k) throw Error(ErrorKind::MissingParameter, "variant requires k");
  if (!takes_k(kind) && k) throw Error(ErrorKind::InvalidParameter, "variant takes no k");
  if (k && *k == 0) throw Error(ErrorKind::KOutOfRange, "k must be at least 1");
}

bool NeighborVariant::takes_k(NeighborKind kind) noexcept {
  switch (kind) {
    case NeighborKind::Knn:
    case NeighborKind::Kth:
    case NeighborKind::MutualK:
    case NeighborKind::MutualKth:
    case NeighborKind::AsymK:
    case NeighborKind::AsymKth:
      return true;
    default:
      return false;
  }
}

namespace {

enum class Combine { Or, And, Xor };

Combine combine_of(NeighborKind kind) {
  switch (kind) {
    case NeighborKind::Mutual:
    case NeighborKind::MutualK:
    case NeighborKind::MutualKth:
      return Combine::And;
    case NeighborKind::Asym:
    case NeighborKind::AsymK:
    case NeighborKind::AsymKth:
      return Combine::Xor;
    default:
      return Combine::Or;
  }
}

bool is_kth(NeighborKind kind) {
  return kind == NeighborKind::Kth || kind == NeighborKind::MutualKth ||
         kind == NeighborKind::AsymKth;
}

}  // namespace

Graph neighbor_graph(const PointSet& ps, const NeighborVariant& variant) {
  require_at_least(ps, 2);
  require_distinct(ps);
  const std::size_t n = ps.size();
  const std::size_t k = variant.k().value_or(1);
  if (k > n - 1) {
    throw Error(ErrorKind::KOutOfRange,
                "k = " + std::to_string(k) + " exceeds n - 1 = " + std::to_string(n - 1));
  }

  // Directed arcs p -> q with R(p, q), one list per p, each ascending in q.
  std::vector<std::vector<Index>> arcs(n);
  if (variant.kind() == NeighborKind::Furthest) {
    const auto far = furthest_neighbors(ps);
    for (Index p = 0; p < n; ++p) arcs[p].push_back(far[p]);
  } else {
    const NeighborOrder order = nearest_rows(ps, k);
    for (Index p = 0; p < n; ++p) {
      if (is_kth(variant.kind())) {
        arcs[p].push_back(order.kth(p, k));
      } else {
        auto row = order.row(p);
        arcs[p].assign(row.begin(), row.end());
        std::sort(arcs[p].begin(), arcs[p].end());
      }
    }
  }
  auto related = [&](Index p, Index q) {
    return std::binary_search(arcs[p].begin(), arcs[p].end(), q);
  };

  const Combine combine = combine_of(variant.kind());
  EdgeBuilder edges(n);
  for (Index p = 0; p < n; ++p) {
    for (Index q : arcs[p]) {
      const bool back = related(q, p);
      bool keep = true;
      if (combine == Combine::And) keep = back;
      if (combine == Combine::Xor) keep = !back;
      if (keep) edges.add(p, q);
    }
  }
  return std::move(edges).build();
}

}  // namespace proxigraph
