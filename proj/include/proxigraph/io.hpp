#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxigraph/clustering.hpp"
#include "proxigraph/geometry.hpp"
#include "proxigraph/hierarchical.hpp"

namespace proxigraph {

// ---------------------------------------------------------------- palette

struct Color {
  std::string_view name;  // empty for generated colors
  double r = 0, g = 0, b = 0;
};

namespace palette {
inline constexpr std::size_t kBlack = 0;
inline constexpr std::size_t kGray = 7;

/// black, red, blue, green, orange, purple, brown, gray, then colors spaced
/// around the HSV hue circle by the golden ratio.
Color color(std::size_t index);

/// Palette index for a cluster label: clusters take the named colors after
/// black, skipping gray, which is reserved for noise.
std::size_t for_label(int label);

std::string hex(const Color& c);
}  // namespace palette

// ---------------------------------------------------------------- document

enum class MarkShape { Disk, Cross };

struct Mark {
  std::size_t color = palette::kBlack;
  MarkShape shape = MarkShape::Disk;
};

struct Segment {
  Index a = 0, b = 0;
  std::size_t color = palette::kBlack;
};

struct Circle {
  Index center = 0;
  double radius = 0;
  std::size_t color = palette::kGray;
};

/// A renderable scene: one mark per point, plus segments and circles that
/// reference points by index.
struct Document {
  PointSet points;
  std::vector<Mark> marks;
  std::vector<Segment> segments;
  std::vector<Circle> circles;
  double page_width = 595;
  double page_height = 842;

  /// Throws InvalidParameter when a reference is out of range.
  void validate() const;
};

Document graph_document(const PointSet& ps, const Graph& g);
/// Cluster members as colored disks, noise as gray crosses.
Document clustering_document(const PointSet& ps, const Clustering& c);
/// Sphere-of-influence drawing: the graph plus every point's influence circle.
Document soi_document(const PointSet& ps, const Graph& g);

// ---------------------------------------------------------------- input

enum class PointFormat { Csv, Json, IpeXml };

/// Parses a point list. CSV takes one `x,y` per line (a non-numeric first
/// line is a header); JSON takes [[x,y],...]; Ipe XML takes the `pos` of
/// every <use> element. Throws ParseError or EmptyInput.
PointSet parse_points(std::string_view bytes, PointFormat format);

// ---------------------------------------------------------------- output

struct IpeOptions {
  std::string version = "70218";
  std::string mark_size = "normal";
};

/// Decimal with at most six fractional digits and no trailing zeros.
std::string format_coordinate(double v);

std::string write_ipe(const Document& doc, const IpeOptions& options = {});
std::string write_svg(const Document& doc);

std::string write_result_json(const Graph& g);
std::string write_result_json(const Clustering& c, const Dendrogram* dendrogram = nullptr);

}  // namespace proxigraph
