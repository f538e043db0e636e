#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <sstream>
#include <string>

#include "proxigraph/io.hpp"
#include "proxigraph/neighbor_order.hpp"

namespace proxigraph {

// ---------------------------------------------------------------- palette

namespace palette {

namespace {
constexpr std::array<Color, 8> kNamed{{
    {"black", 0.0, 0.0, 0.0},
    {"red", 1.0, 0.0, 0.0},
    {"blue", 0.0, 0.0, 1.0},
    {"green", 0.0, 1.0, 0.0},
    {"orange", 1.0, 0.647, 0.0},
    {"purple", 0.627, 0.125, 0.941},
    {"brown", 0.647, 0.165, 0.165},
    {"gray", 0.745, 0.745, 0.745},
}};

Color from_hsv(double h, double s, double v) {
  const double sector = h * 6.0;
  const int i = static_cast<int>(std::floor(sector)) % 6;
  const double f = sector - std::floor(sector);
  const double p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
  switch (i) {
    case 0: return {"", v, t, p};
    case 1: return {"", q, v, p};
    case 2: return {"", p, v, t};
    case 3: return {"", p, q, v};
    case 4: return {"", t, p, v};
    default: return {"", v, p, q};
  }
}
}  // namespace

Color color(std::size_t index) {
  if (index < kNamed.size()) return kNamed[index];
  const double hue = std::fmod(static_cast<double>(index - kNamed.size()) * 0.618033988749895, 1.0);
  return from_hsv(hue, 0.7, 0.9);
}

std::size_t for_label(int label) {
  if (label < 0) return kGray;
  const auto c = static_cast<std::size_t>(label);
  return c < 6 ? c + 1 : c + 2;
}

std::string hex(const Color& c) {
  auto channel = [](double v) {
    return static_cast<unsigned>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(c.r), channel(c.g), channel(c.b));
  return buf;
}

}  // namespace palette

// ---------------------------------------------------------------- document

void Document::validate() const {
  const std::size_t n = points.size();
  if (marks.size() != n) throw Error(ErrorKind::InvalidParameter, "one mark per point required");
  for (const auto& s : segments)
    if (s.a >= n || s.b >= n) throw Error(ErrorKind::InvalidParameter, "segment endpoint out of range");
  for (const auto& c : circles)
    if (c.center >= n) throw Error(ErrorKind::InvalidParameter, "circle center out of range");
}

Document graph_document(const PointSet& ps, const Graph& g) {
  Document doc;
  doc.points = ps;
  doc.marks.assign(ps.size(), Mark{});
  for (const auto& [a, b] : g.edges()) doc.segments.push_back({a, b, palette::kBlack});
  return doc;
}

Document clustering_document(const PointSet& ps, const Clustering& c) {
  Document doc;
  doc.points = ps;
  for (int label : c.labels) {
    doc.marks.push_back(
        {palette::for_label(label), label == kNoise ? MarkShape::Cross : MarkShape::Disk});
  }
  return doc;
}

Document soi_document(const PointSet& ps, const Graph& g) {
  Document doc = graph_document(ps, g);
  if (ps.size() < 2) return doc;
  const NeighborOrder nearest = nearest_rows(ps, 1);
  for (Index i = 0; i < ps.size(); ++i) {
    doc.circles.push_back({i, ps.distance(i, nearest.kth(i, 1)), palette::kGray});
  }
  return doc;
}

// ---------------------------------------------------------------- output

std::string format_coordinate(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  std::string s(buf, end);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

// Symbol sizes and colors as in Ipe's basic style sheet. The mark symbols
// themselves are left to the user's style sheets.
constexpr const char* kIpeSizes =
    "<symbolsize name=\"large\" value=\"5\"/>\n"
    "<symbolsize name=\"small\" value=\"2\"/>\n"
    "<symbolsize name=\"tiny\" value=\"1.1\"/>\n";

std::string ipe_color(std::size_t index) {
  const Color c = palette::color(index);
  if (!c.name.empty()) return std::string(c.name);
  return format_coordinate(std::round(c.r * 1000) / 1000) + " " +
         format_coordinate(std::round(c.g * 1000) / 1000) + " " +
         format_coordinate(std::round(c.b * 1000) / 1000);
}

}  // namespace

std::string write_ipe(const Document& doc, const IpeOptions& options) {
  doc.validate();
  const auto& ps = doc.points;
  std::ostringstream out;
  out << "<?xml version=\"1.0\"?>\n"
      << "<!DOCTYPE ipe SYSTEM \"ipe.dtd\">\n"
      << "<ipe version=\"" << options.version << "\" creator=\"proxigraph\">\n"
      << "<ipestyle name=\"proxigraph\">\n"
      << kIpeSizes;
  for (std::size_t i = 0; i < palette::kGray + 1; ++i) {
    const Color c = palette::color(i);
    out << "<color name=\"" << c.name << "\" value=\"" << format_coordinate(c.r) << ' '
        << format_coordinate(c.g) << ' ' << format_coordinate(c.b) << "\"/>\n";
  }
  out << "<layout paper=\"" << format_coordinate(doc.page_width) << ' '
      << format_coordinate(doc.page_height) << "\" origin=\"0 0\" frame=\""
      << format_coordinate(doc.page_width) << ' ' << format_coordinate(doc.page_height)
      << "\"/>\n"
      << "</ipestyle>\n"
      << "<page>\n"
      << "<layer name=\"alpha\"/>\n";
  for (const auto& c : doc.circles) {
    const std::string r = format_coordinate(c.radius);
    out << "<path stroke=\"" << ipe_color(c.color) << "\">" << r << " 0 0 " << r << ' '
        << format_coordinate(ps[c.center].x) << ' ' << format_coordinate(ps[c.center].y)
        << " e</path>\n";
  }
  for (const auto& s : doc.segments) {
    out << "<path stroke=\"" << ipe_color(s.color) << "\">" << format_coordinate(ps[s.a].x) << ' '
        << format_coordinate(ps[s.a].y) << " m " << format_coordinate(ps[s.b].x) << ' '
        << format_coordinate(ps[s.b].y) << " l</path>\n";
  }
  for (Index i = 0; i < ps.size(); ++i) {
    const Mark& m = doc.marks[i];
    out << "<use name=\"" << (m.shape == MarkShape::Cross ? "mark/cross(sx)" : "mark/disk(sx)")
        << "\" pos=\"" << format_coordinate(ps[i].x) << ' ' << format_coordinate(ps[i].y)
        << "\" size=\"" << options.mark_size << "\" stroke=\"" << ipe_color(m.color) << "\"/>\n";
  }
  out << "</page>\n"
      << "</ipe>\n";
  return out.str();
}

std::string write_svg(const Document& doc) {
  doc.validate();
  const auto& ps = doc.points;
  std::string view = "0 0 100 100";
  if (!ps.empty()) {
    double x0 = ps[0].x, x1 = ps[0].x, y0 = ps[0].y, y1 = ps[0].y;
    for (const auto& p : ps) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    double margin = 0.05 * std::max(x1 - x0, y1 - y0);
    if (margin == 0) margin = 1;
    // y is flipped: drawing y maps to -y.
    view = format_coordinate(x0 - margin) + " " + format_coordinate(-y1 - margin) + " " +
           format_coordinate(x1 - x0 + 2 * margin) + " " + format_coordinate(y1 - y0 + 2 * margin);
  }
  auto X = [](double x) { return format_coordinate(x); };
  auto Y = [](double y) { return format_coordinate(-y); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << view << "\">\n";
  for (const auto& c : doc.circles) {
    out << "<circle cx=\"" << X(ps[c.center].x) << "\" cy=\"" << Y(ps[c.center].y) << "\" r=\""
        << format_coordinate(c.radius) << "\" fill=\"none\" stroke=\""
        << palette::hex(palette::color(c.color)) << "\" stroke-width=\"0.5\"/>\n";
  }
  for (const auto& s : doc.segments) {
    out << "<line x1=\"" << X(ps[s.a].x) << "\" y1=\"" << Y(ps[s.a].y) << "\" x2=\""
        << X(ps[s.b].x) << "\" y2=\"" << Y(ps[s.b].y) << "\" stroke=\""
        << palette::hex(palette::color(s.color)) << "\" stroke-width=\"1\"/>\n";
  }
  for (Index i = 0; i < ps.size(); ++i) {
    const std::string color = palette::hex(palette::color(doc.marks[i].color));
    const double x = ps[i].x, y = ps[i].y;
    if (doc.marks[i].shape == MarkShape::Cross) {
      out << "<path d=\"M " << X(x - 2) << ' ' << Y(y - 2) << " L " << X(x + 2) << ' ' << Y(y + 2)
          << " M " << X(x - 2) << ' ' << Y(y + 2) << " L " << X(x + 2) << ' ' << Y(y - 2)
          << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
    } else {
      out << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"2\" fill=\"" << color
          << "\" stroke=\"" << color << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace proxigraph
