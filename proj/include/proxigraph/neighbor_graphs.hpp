#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

enum class NeighborKind {
  Nearest,
  Knn,
  Kth,
  Mutual,
  MutualK,
  MutualKth,
  Asym,
  AsymK,
  AsymKth,
  Furthest,
};

/// Default k for the k-parameterized kinds.
inline constexpr std::size_t kDefaultNeighborK = 3;

/// One of the ten nearest-neighbor graph variants. The k-parameterized kinds
/// carry k >= 1; the others carry none.
class NeighborVariant {
 public:
  /// Throws InvalidParameter on k/kind mismatch or k == 0.
  NeighborVariant(NeighborKind kind, std::optional<std::size_t> k = std::nullopt);

  NeighborKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> k() const noexcept { return k_; }

  static bool takes_k(NeighborKind kind) noexcept;

 private:
  NeighborKind kind_;
  std::optional<std::size_t> k_;
};

/// Builds the undirected graph for `variant`: with R(p, q) the variant's
/// directed neighbor relation, {p, q} is an edge iff R(p,q) OR R(q,p) for the
/// plain kinds, AND for the mutual kinds, and XOR for the asymmetric kinds.
Graph neighbor_graph(const PointSet& ps, const NeighborVariant& variant);

}  // namespace proxigraph
