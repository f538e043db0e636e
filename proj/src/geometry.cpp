#include "proxigraph/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace proxigraph {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorKind::BadSectorCount: return "BadSectorCount";
    case ErrorKind::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyInput: return "EmptyInput";
  }
  return "Error";
}

namespace {

void check_finite(std::span<const Point2> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(ErrorKind::InvalidParameter,
                  "point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

}  // namespace

PointSet::PointSet(std::vector<Point2> points) : points_(std::move(points)) {
  check_finite(points_);
}

PointSet::PointSet(std::initializer_list<Point2> points) : points_(points) {
  check_finite(points_);
}

bool PointSet::find_duplicate(Index& first, Index& second) const {
  std::vector<Index> order(points_.size());
  std::iota(order.begin(), order.end(), Index{0});
  auto lex = [this](Index a, Index b) {
    const auto& p = points_[a];
    const auto& q = points_[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  };
  std::sort(order.begin(), order.end(), lex);
  bool found = false;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k - 1]] == points_[order[k]]) {
      Index a = std::min(order[k - 1], order[k]);
      Index b = std::max(order[k - 1], order[k]);
      if (!found || std::make_pair(a, b) < std::make_pair(first, second)) {
        first = a;
        second = b;
        found = true;
      }
    }
  }
  return found;
}

void require_distinct(const PointSet& ps) {
  Index a = 0;
  Index b = 0;
  if (ps.find_duplicate(a, b)) {
    throw Error(ErrorKind::DuplicatePoints,
                "points " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  }
}

void require_at_least(const PointSet& ps, std::size_t minimum) {
  if (ps.size() < minimum) {
    throw Error(ErrorKind::TooFewPoints, "need at least " + std::to_string(minimum) +
                                             " points, got " + std::to_string(ps.size()));
  }
}

Graph::Graph(std::size_t n, std::vector<Edge> edges, bool directed) : n_(n), directed_(directed) {
  EdgeBuilder builder(n, directed);
  for (auto [a, b] : edges) builder.add(a, b);
  *this = std::move(builder).build();
}

bool Graph::contains(Index a, Index b) const {
  if (!directed_ && a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

bool Graph::subset_of(const Graph& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

void EdgeBuilder::add(Index a, Index b) {
  if (a == b || a >= n_ || b >= n_) {
    throw Error(ErrorKind::InvalidParameter, "invalid edge (" + std::to_string(a) + ", " +
                                                 std::to_string(b) + ")");
  }
  if (!directed_ && a > b) std::swap(a, b);
  edges_.emplace_back(a, b);
}

Graph EdgeBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  Graph g(n_, directed_);
  g.edges_ = std::move(edges_);
  return g;
}

}  // namespace proxigraph
