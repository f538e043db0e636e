#include "proxigraph/neighbor_order.hpp"

#include <algorithm>

#include "proxigraph/grid_index.hpp"
#include "proxigraph/predicates.hpp"

namespace proxigraph {

bool closer_to(const PointSet& ps, Index p, Index a, Index b) {
  const int s = predicates::compare_distance(ps[p], ps[a], ps[b]);
  return s != 0 ? s < 0 : a < b;
}

namespace {

void validate(const PointSet& ps) {
  require_at_least(ps, 2);
  require_distinct(ps);
}

std::vector<Index> others(std::size_t n, Index i) {
  std::vector<Index> row;
  row.reserve(n - 1);
  for (Index j = 0; j < n; ++j)
    if (j != i) row.push_back(j);
  return row;
}

}  // namespace

NeighborOrder neighbor_order(const PointSet& ps) {
  validate(ps);
  std::vector<std::vector<Index>> rows(ps.size());
  for (Index i = 0; i < ps.size(); ++i) {
    rows[i] = others(ps.size(), i);
    std::sort(rows[i].begin(), rows[i].end(),
              [&](Index a, Index b) { return closer_to(ps, i, a, b); });
  }
  return NeighborOrder(std::move(rows));
}

NeighborOrder nearest_rows_brute(const PointSet& ps, std::size_t k) {
  validate(ps);
  k = std::min(k, ps.size() - 1);
  std::vector<std::vector<Index>> rows(ps.size());
  for (Index i = 0; i < ps.size(); ++i) {
    auto row = others(ps.size(), i);
    auto cmp = [&](Index a, Index b) { return closer_to(ps, i, a, b); };
    std::partial_sort(row.begin(), row.begin() + static_cast<long>(k), row.end(), cmp);
    row.resize(k);
    rows[i] = std::move(row);
  }
  return NeighborOrder(std::move(rows));
}

NeighborOrder nearest_rows_grid(const PointSet& ps, std::size_t k) {
  validate(ps);
  GridIndex grid(ps);
  std::vector<std::vector<Index>> rows(ps.size());
  for (Index i = 0; i < ps.size(); ++i) rows[i] = grid.k_nearest(i, k);
  return NeighborOrder(std::move(rows));
}

NeighborOrder nearest_rows(const PointSet& ps, std::size_t k) {
  return ps.size() > kGridThreshold ? nearest_rows_grid(ps, k) : nearest_rows_brute(ps, k);
}

std::vector<Index> furthest_neighbors(const PointSet& ps) {
  validate(ps);
  std::vector<Index> out(ps.size());
  for (Index i = 0; i < ps.size(); ++i) {
    Index best = i == 0 ? 1 : 0;
    for (Index j = 0; j < ps.size(); ++j) {
      if (j == i || j == best) continue;
      if (closer_to(ps, i, best, j)) best = j;
    }
    out[i] = best;
  }
  return out;
}

}  // namespace proxigraph
