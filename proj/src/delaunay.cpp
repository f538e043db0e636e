#include "proxigraph/delaunay.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "proxigraph/predicates.hpp"
#include "proxigraph/union_find.hpp"

namespace proxigraph {
namespace {

using predicates::incircle;
using predicates::orient2d;

constexpr long kNone = -1;

struct Face {
  std::array<Index, 3> v;
  std::array<long, 3> nbr{kNone, kNone, kNone};  // nbr[i] lies across the edge opposite v[i]
};

class Mesh {
 public:
  explicit Mesh(const PointSet& ps) : ps_(ps) {}

  /// Sorted-order sweep: every new point lies outside the current hull and is
  /// joined to each hull edge it sees. Returns false for collinear input.
  bool sweep(std::span<const Index> order) {
    const std::size_t n = order.size();
    std::size_t m = 2;
    while (m < n && orient2d(ps_[order[0]], ps_[order[1]], ps_[order[m]]) == 0) ++m;
    if (m == n) return false;

    next_.assign(ps_.size(), 0);
    prev_.assign(ps_.size(), 0);
    const Index apex = order[m];
    const bool left = orient2d(ps_[order[0]], ps_[order[1]], ps_[apex]) > 0;
    std::vector<Index> hull;
    if (left) {
      for (std::size_t i = 0; i < m; ++i) hull.push_back(order[i]);
      hull.push_back(apex);
      for (std::size_t i = 0; i + 1 < m; ++i) add_face(order[i], order[i + 1], apex);
    } else {
      hull.push_back(apex);
      for (std::size_t i = m; i-- > 0;) hull.push_back(order[i]);
      for (std::size_t i = 0; i + 1 < m; ++i) add_face(order[i + 1], order[i], apex);
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
      next_[hull[i]] = hull[(i + 1) % hull.size()];
      prev_[hull[(i + 1) % hull.size()]] = hull[i];
    }

    Index last = apex;
    for (std::size_t t = m + 1; t < n; ++t) {
      const Index p = order[t];
      Index u = find_visible(last, p);
      while (visible(prev_[u], u, p)) u = prev_[u];
      Index w = next_[u];
      add_face(w, u, p);
      while (visible(w, next_[w], p)) {
        add_face(next_[w], w, p);
        w = next_[w];
      }
      next_[u] = p;
      prev_[p] = u;
      next_[p] = w;
      prev_[w] = p;
      last = p;
    }
    return true;
  }

  void link() {
    std::unordered_map<std::uint64_t, std::pair<long, int>> directed;
    directed.reserve(faces_.size() * 3);
    const std::uint64_t n = ps_.size();
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      for (int k = 0; k < 3; ++k) {
        const Index a = faces_[f].v[(k + 1) % 3];
        const Index b = faces_[f].v[(k + 2) % 3];
        directed[a * n + b] = {static_cast<long>(f), k};
      }
    }
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      for (int k = 0; k < 3; ++k) {
        const Index a = faces_[f].v[(k + 1) % 3];
        const Index b = faces_[f].v[(k + 2) % 3];
        if (auto it = directed.find(b * n + a); it != directed.end()) {
          faces_[f].nbr[k] = it->second.first;
        }
      }
    }
  }

  /// Lawson flipping until every interior edge is locally Delaunay and every
  /// cocircular quadrilateral carries its preferred diagonal.
  void legalize() {
    std::vector<std::pair<long, int>> stack;
    stack.reserve(faces_.size() * 3);
    for (std::size_t f = 0; f < faces_.size(); ++f)
      for (int k = 0; k < 3; ++k) stack.emplace_back(static_cast<long>(f), k);

    while (!stack.empty()) {
      auto [t, i] = stack.back();
      stack.pop_back();
      const long u = faces_[t].nbr[i];
      if (u == kNone) continue;

      const Index a = faces_[t].v[i];
      const Index b = faces_[t].v[(i + 1) % 3];
      const Index c = faces_[t].v[(i + 2) % 3];
      const int j = opposite_local(faces_[u], b, c);
      const Index d = faces_[u].v[j];

      if (!should_flip(a, b, c, d)) continue;

      const long t_ca = faces_[t].nbr[(i + 1) % 3];
      const long t_ab = faces_[t].nbr[(i + 2) % 3];
      const long t_bd = faces_[u].nbr[(j + 1) % 3];
      const long t_dc = faces_[u].nbr[(j + 2) % 3];

      faces_[t].v = {a, b, d};
      faces_[t].nbr = {t_bd, u, t_ab};
      faces_[u].v = {a, d, c};
      faces_[u].nbr = {t_dc, t_ca, t};
      repoint(t_bd, u, t);
      repoint(t_ca, t, u);

      stack.emplace_back(t, 0);
      stack.emplace_back(t, 2);
      stack.emplace_back(u, 0);
      stack.emplace_back(u, 1);
    }
  }

  std::vector<Triangle> triangles() const {
    std::vector<Triangle> out;
    out.reserve(faces_.size());
    for (const auto& f : faces_) {
      Triangle tri = f.v;
      std::rotate(tri.begin(), std::min_element(tri.begin(), tri.end()), tri.end());
      out.push_back(tri);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool visible(Index a, Index b, Index p) const { return orient2d(ps_[a], ps_[b], ps_[p]) < 0; }

  Index find_visible(Index start, Index p) const {
    if (visible(start, next_[start], p)) return start;
    if (visible(prev_[start], start, p)) return prev_[start];
    Index u = next_[start];
    while (u != start) {
      if (visible(u, next_[u], p)) return u;
      u = next_[u];
    }
    return start;  // unreachable for points outside the hull
  }

  void add_face(Index a, Index b, Index c) { faces_.push_back(Face{{a, b, c}}); }

  static int opposite_local(const Face& f, Index b, Index c) {
    for (int k = 0; k < 3; ++k)
      if (f.v[k] != b && f.v[k] != c) return k;
    return 0;
  }

  void repoint(long face, long from, long to) {
    if (face == kNone) return;
    for (auto& nb : faces_[face].nbr)
      if (nb == from) nb = to;
  }

  bool should_flip(Index a, Index b, Index c, Index d) const {
    const int s = incircle(ps_[a], ps_[b], ps_[c], ps_[d]);
    if (s > 0) return true;
    if (s < 0) return false;
    const Edge current = std::minmax(b, c);
    const Edge alternative = std::minmax(a, d);
    return alternative < current;
  }

  const PointSet& ps_;
  std::vector<Face> faces_;
  std::vector<Index> next_, prev_;
};

std::vector<Index> lexicographic_order(const PointSet& ps) {
  std::vector<Index> order(ps.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (ps[a].x != ps[b].x) return ps[a].x < ps[b].x;
    return ps[a].y < ps[b].y;
  });
  return order;
}

}  // namespace

Triangulation delaunay(const PointSet& ps) {
  require_at_least(ps, 3);
  require_distinct(ps);

  const auto order = lexicographic_order(ps);
  Triangulation result;
  EdgeBuilder edges(ps.size());

  Mesh mesh(ps);
  if (!mesh.sweep(order)) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.add(order[i], order[i + 1]);
    result.edges = std::move(edges).build();
    return result;
  }
  mesh.link();
  mesh.legalize();
  result.triangles = mesh.triangles();
  for (const auto& t : result.triangles) {
    edges.add(t[0], t[1]);
    edges.add(t[1], t[2]);
    edges.add(t[2], t[0]);
  }
  result.edges = std::move(edges).build();
  return result;
}

Graph emst(const PointSet& ps) {
  require_distinct(ps);
  const std::size_t n = ps.size();
  if (n < 2) return Graph(n);
  if (n == 2) return Graph(n, {{0, 1}});

  std::vector<Edge> candidates = delaunay(ps).edges.edges();
  std::sort(candidates.begin(), candidates.end(), [&](const Edge& e, const Edge& f) {
    const int s = predicates::compare_lengths(ps[e.first], ps[e.second], ps[f.first], ps[f.second]);
    return s != 0 ? s < 0 : e < f;
  });
  DisjointSets sets(n);
  EdgeBuilder tree(n);
  for (const auto& [a, b] : candidates) {
    if (sets.unite(a, b)) tree.add(a, b);
  }
  return std::move(tree).build();
}

}  // namespace proxigraph
