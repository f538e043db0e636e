#pragma once

#include <sstream>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "proxigraph/io.hpp"

namespace golden {

inline proxigraph::Document empty_page() { return {}; }

inline proxigraph::Document two_points_one_edge() {
  return proxigraph::graph_document(proxigraph::PointSet{{16, 32}, {128, 96.5}},
                                    proxigraph::Graph(2, {{0, 1}}));
}

inline proxigraph::Document three_clusters() {
  proxigraph::Clustering c;
  c.labels = {0, 0, 1, 1, 2, 2};
  c.cluster_count = 3;
  return proxigraph::clustering_document(
      proxigraph::PointSet{{32, 32}, {48, 40}, {256, 300}, {270, 310.25}, {480, 64}, {500, 80}},
      c);
}

/// True when `bytes` parses as XML.
inline bool well_formed(const std::string& bytes) {
  boost::property_tree::ptree tree;
  std::istringstream in(bytes);
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error&) {
    return false;
  }
  return !tree.empty();
}

}  // namespace golden
