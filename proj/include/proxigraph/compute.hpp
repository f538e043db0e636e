#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxigraph/clustering.hpp"
#include "proxigraph/geometry.hpp"
#include "proxigraph/hierarchical.hpp"
#include "proxigraph/io.hpp"

namespace proxigraph {

/// Largest point set accepted by compute().
inline constexpr std::size_t kMaxRequestPoints = 10000;

struct ParamSpec {
  std::string name;
  bool required = false;
  bool integer = false;
  std::optional<double> default_value;
  /// Placeholder offered by front ends for required values.
  std::optional<double> suggested;
  std::string help;
};

struct AlgorithmInfo {
  std::string id;
  std::string kind;  // "graph" or "clustering"
  std::vector<ParamSpec> params;
};

/// All algorithm identifiers with their parameters, in menu order.
const std::vector<AlgorithmInfo>& algorithm_catalog();
const AlgorithmInfo* find_algorithm(std::string_view id);

/// Catalog as JSON: {"algorithms":[{"id","kind","params":[...]}, ...]}.
std::string catalog_json();

using Params = std::map<std::string, double, std::less<>>;

struct ComputeResult {
  std::string algorithm;
  PointSet points;
  std::optional<Graph> graph;
  std::optional<Clustering> clustering;
  std::optional<Dendrogram> dendrogram;

  /// Machine-readable payload (write_result_json).
  std::string json() const;
  Document document() const;
};

/// Runs `algorithm` with `params` (names as in the catalog; omitted optional
/// parameters take their defaults). Throws UnknownAlgorithm, MissingParameter,
/// InvalidParameter, TooManyPoints, or any error of the algorithm itself.
ComputeResult compute(const PointSet& ps, std::string_view algorithm, const Params& params);

}  // namespace proxigraph
