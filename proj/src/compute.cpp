#include "proxigraph/compute.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "json.hpp"
#include "proxigraph/centroid.hpp"
#include "proxigraph/delaunay.hpp"
#include "proxigraph/density.hpp"
#include "proxigraph/neighbor_graphs.hpp"
#include "proxigraph/proximity_graphs.hpp"

namespace proxigraph {
namespace {

ParamSpec k_param(const char* help = "neighbor count") {
  return {"k", false, true, static_cast<double>(kDefaultNeighborK), std::nullopt, help};
}

std::vector<AlgorithmInfo> build_catalog() {
  const ParamSpec seed{"seed", false, true, 0.0, std::nullopt, "random seed"};
  const ParamSpec centroid_iter{"max_iter", false, true,
                                static_cast<double>(kDefaultCentroidMaxIter), std::nullopt,
                                "iteration limit"};
  const ParamSpec min_pts{"min_pts", false, true, static_cast<double>(kDefaultMinPts),
                          std::nullopt, "neighborhood size counting the point itself"};

  std::vector<AlgorithmInfo> c;
  auto graph = [&](std::string id, std::vector<ParamSpec> params = {}) {
    c.push_back({std::move(id), "graph", std::move(params)});
  };
  auto clustering = [&](std::string id, std::vector<ParamSpec> params) {
    c.push_back({std::move(id), "clustering", std::move(params)});
  };

  graph("nearest");
  graph("knn", {k_param()});
  graph("kth", {k_param()});
  graph("mutual");
  graph("mutual-k", {k_param()});
  graph("mutual-kth", {k_param()});
  graph("asym");
  graph("asym-k", {k_param()});
  graph("asym-kth", {k_param()});
  graph("furthest");
  graph("gabriel");
  graph("rng");
  graph("soi");
  graph("epsilon", {{"epsilon", true, false, std::nullopt, kSuggestedEpsilon, "distance threshold"}});
  graph("urquhart");
  graph("yao", {{"sectors", false, true, static_cast<double>(kDefaultYaoSectors), std::nullopt,
                 "number of cones"},
                {"offset", false, false, 0.0, std::nullopt,
                 "sector origin, degrees counterclockwise from the x-axis"}});
  graph("delaunay");
  clustering("kmeans", {k_param("cluster count"), seed, centroid_iter});
  clustering("kmeans++", {k_param("cluster count"), seed, centroid_iter});
  clustering("kmedoids", {k_param("cluster count"), seed, centroid_iter});
  clustering("single-linkage",
             {{"target", true, true, std::nullopt, std::nullopt, "number of clusters"}});
  clustering("complete-linkage",
             {{"target", true, true, std::nullopt, std::nullopt, "number of clusters"}});
  clustering("dbscan", {{"epsilon", true, false, std::nullopt, std::nullopt, "neighborhood radius"},
                        min_pts});
  clustering("hdbscan", {min_pts,
                         {"min_cluster_size", false, true, std::nullopt, std::nullopt,
                          "smallest cluster; defaults to min_pts"}});
  clustering("meanshift",
             {{"bandwidth", true, false, std::nullopt, std::nullopt, "window radius"},
              {"merge_tol", false, false, std::nullopt, std::nullopt,
               "mode merge distance; defaults to bandwidth / 20"},
              {"max_iter", false, true, static_cast<double>(kDefaultMeanShiftMaxIter),
               std::nullopt, "iteration limit"}});
  return c;
}

/// Validated view of request parameters against a catalog entry.
class ParamReader {
 public:
  ParamReader(const AlgorithmInfo& info, const Params& given) : info_(info), given_(given) {
    for (const auto& [name, value] : given) {
      const ParamSpec* spec = find(name);
      if (!spec) {
        throw Error(ErrorKind::InvalidParameter,
                    info.id + " does not take parameter '" + name + "'");
      }
      if (!std::isfinite(value)) {
        throw Error(ErrorKind::InvalidParameter, "parameter '" + name + "' must be finite");
      }
      if (spec->integer && (value < 0 || value != std::floor(value) || value > 0x1p53)) {
        throw Error(ErrorKind::InvalidParameter,
                    "parameter '" + name + "' must be a non-negative integer");
      }
    }
    for (const auto& spec : info.params) {
      if (spec.required && !given.count(spec.name)) {
        throw Error(ErrorKind::MissingParameter, info.id + " requires parameter '" + spec.name + "'");
      }
    }
  }

  std::optional<double> get(std::string_view name) const {
    if (auto it = given_.find(name); it != given_.end()) return it->second;
    if (const ParamSpec* spec = find(name)) return spec->default_value;
    return std::nullopt;
  }

  double real(std::string_view name) const { return *get(name); }
  std::size_t count(std::string_view name) const { return static_cast<std::size_t>(*get(name)); }

 private:
  const ParamSpec* find(std::string_view name) const {
    for (const auto& spec : info_.params)
      if (spec.name == name) return &spec;
    return nullptr;
  }

  const AlgorithmInfo& info_;
  const Params& given_;
};

std::optional<NeighborKind> neighbor_kind(std::string_view id) {
  static const std::map<std::string_view, NeighborKind> kinds{
      {"nearest", NeighborKind::Nearest},   {"knn", NeighborKind::Knn},
      {"kth", NeighborKind::Kth},           {"mutual", NeighborKind::Mutual},
      {"mutual-k", NeighborKind::MutualK},  {"mutual-kth", NeighborKind::MutualKth},
      {"asym", NeighborKind::Asym},         {"asym-k", NeighborKind::AsymK},
      {"asym-kth", NeighborKind::AsymKth},  {"furthest", NeighborKind::Furthest},
  };
  if (auto it = kinds.find(id); it != kinds.end()) return it->second;
  return std::nullopt;
}

}  // namespace

const std::vector<AlgorithmInfo>& algorithm_catalog() {
  static const std::vector<AlgorithmInfo> catalog = build_catalog();
  return catalog;
}

const AlgorithmInfo* find_algorithm(std::string_view id) {
  for (const auto& info : algorithm_catalog())
    if (info.id == id) return &info;
  return nullptr;
}

std::string catalog_json() {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& info : algorithm_catalog()) {
    nlohmann::ordered_json entry;
    entry["id"] = info.id;
    entry["kind"] = info.kind;
    auto params = nlohmann::ordered_json::array();
    for (const auto& p : info.params) {
      nlohmann::ordered_json spec;
      spec["name"] = p.name;
      spec["required"] = p.required;
      spec["type"] = p.integer ? "integer" : "number";
      spec["default"] = p.default_value ? nlohmann::ordered_json(*p.default_value) : nullptr;
      if (p.suggested) spec["suggested"] = *p.suggested;
      spec["help"] = p.help;
      params.push_back(std::move(spec));
    }
    entry["params"] = std::move(params);
    list.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["algorithms"] = std::move(list);
  return out.dump();
}

std::string ComputeResult::json() const {
  if (graph) return write_result_json(*graph);
  return write_result_json(*clustering, dendrogram ? &*dendrogram : nullptr);
}

Document ComputeResult::document() const {
  if (graph) {
    return algorithm == "soi" ? soi_document(points, *graph) : graph_document(points, *graph);
  }
  return clustering_document(points, *clustering);
}

ComputeResult compute(const PointSet& ps, std::string_view algorithm, const Params& params) {
  const AlgorithmInfo* info = find_algorithm(algorithm);
  if (!info) throw Error(ErrorKind::UnknownAlgorithm, "unknown algorithm '" + std::string(algorithm) + "'");
  if (ps.size() > kMaxRequestPoints) {
    throw Error(ErrorKind::TooManyPoints, "at most " + std::to_string(kMaxRequestPoints) +
                                              " points per request, got " +
                                              std::to_string(ps.size()));
  }
  const ParamReader p(*info, params);

  ComputeResult r;
  r.algorithm = info->id;
  r.points = ps;
  const std::string_view id = info->id;

  if (auto kind = neighbor_kind(id)) {
    std::optional<std::size_t> k;
    if (NeighborVariant::takes_k(*kind)) k = p.count("k");
    r.graph = neighbor_graph(ps, NeighborVariant(*kind, k));
  } else if (id == "gabriel") {
    r.graph = gabriel_graph(ps);
  } else if (id == "rng") {
    r.graph = rng_graph(ps);
  } else if (id == "soi") {
    r.graph = soi_graph(ps);
  } else if (id == "epsilon") {
    r.graph = epsilon_graph(ps, p.real("epsilon"));
  } else if (id == "urquhart") {
    r.graph = urquhart_graph(ps);
  } else if (id == "yao") {
    r.graph = yao_graph(ps, p.count("sectors"), p.real("offset") * std::numbers::pi / 180.0);
  } else if (id == "delaunay") {
    if (ps.size() == 2) {
      require_distinct(ps);
      r.graph = Graph(2, {{0, 1}});
    } else {
      r.graph = delaunay(ps).edges;
    }
  } else if (id == "kmeans" || id == "kmeans++") {
    KMeansOptions o;
    o.k = p.count("k");
    o.seed = static_cast<std::uint64_t>(p.real("seed"));
    o.init = id == "kmeans++" ? KMeansInit::PlusPlus : KMeansInit::Uniform;
    o.max_iter = p.count("max_iter");
    r.clustering = kmeans(ps, o).clustering;
  } else if (id == "kmedoids") {
    KMedoidsOptions o;
    o.k = p.count("k");
    o.seed = static_cast<std::uint64_t>(p.real("seed"));
    o.max_iter = p.count("max_iter");
    r.clustering = kmedoids(ps, o).clustering;
  } else if (id == "single-linkage" || id == "complete-linkage") {
    auto res = agglomerate(ps, id == "single-linkage" ? Linkage::Single : Linkage::Complete,
                           p.count("target"));
    r.clustering = std::move(res.clustering);
    r.dendrogram = std::move(res.dendrogram);
  } else if (id == "dbscan") {
    r.clustering = dbscan(ps, {p.real("epsilon"), p.count("min_pts")});
  } else if (id == "hdbscan") {
    HdbscanParams h;
    h.min_pts = p.count("min_pts");
    h.min_cluster_size = p.get("min_cluster_size") ? p.count("min_cluster_size")
                                                    : std::max<std::size_t>(h.min_pts, 2);
    r.clustering = hdbscan(ps, h);
  } else if (id == "meanshift") {
    MeanShiftParams m;
    m.bandwidth = p.real("bandwidth");
    if (auto tol = p.get("merge_tol")) {
      if (!(*tol > 0)) throw Error(ErrorKind::InvalidParameter, "merge_tol must be positive");
      m.merge_tol = *tol;
    }
    m.max_iter = p.count("max_iter");
    r.clustering = mean_shift(ps, m);
  }
  return r;
}

}  // namespace proxigraph
