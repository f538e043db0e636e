#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "proxigraph/io.hpp"

namespace proxigraph {
namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra;
    if (c < 0x80) extra = 0;
    else if ((c >> 5) == 0x6) extra = 1;
    else if ((c >> 4) == 0xE) extra = 2;
    else if ((c >> 3) == 0x1E) extra = 3;
    else return false;
    if (extra > 0 && i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k)
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    i += extra + 1;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Parses a whole field as a finite double.
bool to_double(std::string_view field, double& out) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() && std::isfinite(out);
}

bool all_numeric(std::string_view line) {
  double v = 0;
  for (std::size_t start = 0;;) {
    const auto comma = line.find(',', start);
    if (!to_double(line.substr(start, comma == std::string_view::npos ? comma : comma - start), v)) return false;
    if (comma == std::string_view::npos) return true;
    start = comma + 1;
  }
}

PointSet parse_csv(std::string_view text) {
  std::vector<Point2> points;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool first_content = true;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto comma = line.find(',');
    double x = 0, y = 0;
    const bool ok = comma != std::string_view::npos && to_double(line.substr(0, comma), x) &&
                    to_double(line.substr(comma + 1), y);
    if (!ok) {
      if (first_content && !all_numeric(line)) {
        first_content = false;  // header
        continue;
      }
      parse_error("line " + std::to_string(line_no), "expected 'x,y', got '" + std::string(line) + "'");
    }
    first_content = false;
    points.push_back({x, y});
    if (end == text.size()) break;
  }
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points in CSV input");
  return PointSet(std::move(points));
}

PointSet parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_array()) parse_error("document", "expected an array of [x, y] pairs");
  std::vector<Point2> points;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      parse_error("element " + std::to_string(i), "expected [x, y]");
    }
    const double x = item[0].get<double>(), y = item[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) parse_error("element " + std::to_string(i), "non-finite coordinate");
    points.push_back({x, y});
  }
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points in JSON input");
  return PointSet(std::move(points));
}

PointSet parse_ipe(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    parse_error("line " + std::to_string(e.line()), e.message());
  }
  std::vector<Point2> points;
  std::size_t use_count = 0;
  std::function<void(const pt::ptree&)> walk = [&](const pt::ptree& node) {
    for (const auto& [name, child] : node) {
      if (name == "<xmlattr>" || name == "<xmlcomment>") continue;
      if (name == "use") {
        ++use_count;
        if (auto pos = child.get_optional<std::string>("<xmlattr>.pos")) {
          std::istringstream fields(*pos);
          std::string xs, ys, extra;
          double x = 0, y = 0;
          if (!(fields >> xs >> ys) || (fields >> extra) || !to_double(xs, x) || !to_double(ys, y)) {
            parse_error("<use> element " + std::to_string(use_count), "bad pos \"" + *pos + "\"");
          }
          points.push_back({x, y});
        }
      }
      walk(child);
    }
  };
  walk(tree);
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no <use pos> marks in Ipe input");
  return PointSet(std::move(points));
}

}  // namespace

PointSet parse_points(std::string_view bytes, PointFormat format) {
  if (!valid_utf8(bytes)) throw Error(ErrorKind::ParseError, "input is not valid UTF-8");
  if (trim(bytes).empty()) throw Error(ErrorKind::EmptyInput, "input is empty");
  switch (format) {
    case PointFormat::Csv: return parse_csv(bytes);
    case PointFormat::Json: return parse_json(bytes);
    case PointFormat::IpeXml: return parse_ipe(bytes);
  }
  return {};
}

// ---------------------------------------------------------------- result JSON

std::string write_result_json(const Graph& g) {
  nlohmann::ordered_json out;
  out["type"] = "graph";
  out["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  out["edges"] = std::move(edges);
  return out.dump();
}

std::string write_result_json(const Clustering& c, const Dendrogram* dendrogram) {
  nlohmann::ordered_json out;
  out["type"] = "clustering";
  out["labels"] = c.labels;
  out["noise"] = kNoise;
  if (c.centers) {
    auto centers = nlohmann::ordered_json::array();
    for (const auto& p : *c.centers) centers.push_back({p.x, p.y});
    out["centers"] = std::move(centers);
  }
  if (c.medoids) out["medoids"] = *c.medoids;
  if (dendrogram) {
    auto merges = nlohmann::ordered_json::array();
    for (const auto& m : dendrogram->merges) merges.push_back({m.a, m.b, m.distance});
    out["merges"] = std::move(merges);
  }
  return out.dump();
}

}  // namespace proxigraph
