#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <set>

#include "../support/documents.hpp"
#include "../support/expect_error.hpp"
#include "../support/oracle.hpp"
#include "proxigraph/density.hpp"
#include "proxigraph/neighbor_graphs.hpp"
#include "proxigraph/proximity_graphs.hpp"

using namespace proxigraph;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

std::vector<Point2> as_vector(const PointSet& ps) { return {ps.begin(), ps.end()}; }

std::set<std::string> stroke_colors(const std::string& svg) {
  static const std::regex stroke(R"re(stroke="([^"]*)")re");
  std::set<std::string> colors;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), stroke); it != std::sregex_iterator(); ++it)
    colors.insert((*it)[1]);
  return colors;
}

}  // namespace

TEST(ParsePoints, Examples) {
  const std::vector<Point2> expected{{0, 0}, {3, 4}};
  EXPECT_EQ(as_vector(parse_points("0,0\n3,4", PointFormat::Csv)), expected);
  EXPECT_EQ(as_vector(parse_points("[[0,0],[3,4]]", PointFormat::Json)), expected);
  EXPECT_EQ(as_vector(parse_points(R"x(<use name="mark/disk(sx)" pos="16 32"/>)x", PointFormat::IpeXml)),
            (std::vector<Point2>{{16, 32}}));
}

TEST(ParsePoints, Csv) {
  EXPECT_EQ(as_vector(parse_points("x,y\n1.5,-2\r\n\n 3 , 4e1 \n", PointFormat::Csv)),
            (std::vector<Point2>{{1.5, -2}, {3, 40}}));
  try {
    parse_points("1,2\n3,4\nfoo,5\n", PointFormat::Csv);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_PG_ERROR(parse_points("x,y\n", PointFormat::Csv), ErrorKind::EmptyInput);
  EXPECT_PG_ERROR(parse_points("", PointFormat::Csv), ErrorKind::EmptyInput);
  EXPECT_PG_ERROR(parse_points("1,2\n3,nan\n", PointFormat::Csv), ErrorKind::ParseError);
  EXPECT_PG_ERROR(parse_points("1,2,3\n4,5\n", PointFormat::Csv), ErrorKind::ParseError);
}

TEST(ParsePoints, Json) {
  try {
    parse_points("[[0,0],[1],[2,2]]", PointFormat::Json);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("element 1"), std::string::npos) << e.what();
  }
  EXPECT_PG_ERROR(parse_points("[]", PointFormat::Json), ErrorKind::EmptyInput);
  EXPECT_PG_ERROR(parse_points("[[0,0]", PointFormat::Json), ErrorKind::ParseError);
  EXPECT_PG_ERROR(parse_points(R"({"points":[]})", PointFormat::Json), ErrorKind::ParseError);
  EXPECT_PG_ERROR(parse_points(R"([["0",1]])", PointFormat::Json), ErrorKind::ParseError);
}

TEST(ParsePoints, Ipe) {
  const std::string doc = R"x(<ipe version="70218"><page>
<path stroke="black">0 0 m 1 1 l</path>
<use name="mark/disk(sx)" pos="1 2"/>
<group><use name="mark/cross(sx)" pos="-3.25 4"/></group>
<use name="mark/disk(sx)"/>
</page></ipe>)x";
  EXPECT_EQ(as_vector(parse_points(doc, PointFormat::IpeXml)),
            (std::vector<Point2>{{1, 2}, {-3.25, 4}}));
  try {
    parse_points(R"(<page><use pos="1 2"/><use pos="1 x"/></page>)", PointFormat::IpeXml);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("element 2"), std::string::npos) << e.what();
  }
  EXPECT_PG_ERROR(parse_points("<page><use pos=\"1 2\"></page>", PointFormat::IpeXml),
                  ErrorKind::ParseError);
  EXPECT_PG_ERROR(parse_points("<page><path/></page>", PointFormat::IpeXml), ErrorKind::EmptyInput);
}

TEST(ParsePoints, RejectsInvalidUtf8) {
  EXPECT_PG_ERROR(parse_points("1,2\n\xff,3\n", PointFormat::Csv), ErrorKind::ParseError);
  EXPECT_PG_ERROR(parse_points("[[1,2]]\xc3", PointFormat::Json), ErrorKind::ParseError);
  EXPECT_EQ(parse_points("x\xc3\xa9,y\n1,2", PointFormat::Csv).size(), 1u);
}

TEST(FormatCoordinate, TrimsToSixDigits) {
  EXPECT_EQ(format_coordinate(0), "0");
  EXPECT_EQ(format_coordinate(-0.0), "0");
  EXPECT_EQ(format_coordinate(16), "16");
  EXPECT_EQ(format_coordinate(-2.5), "-2.5");
  EXPECT_EQ(format_coordinate(0.1), "0.1");
  EXPECT_EQ(format_coordinate(1.0 / 3), "0.333333");
  EXPECT_EQ(format_coordinate(2.0 / 3), "0.666667");
  EXPECT_EQ(format_coordinate(1e-7), "0");
  EXPECT_EQ(format_coordinate(123456.125), "123456.125");
}

TEST(Palette, Order) {
  const char* names[] = {"black", "red", "blue", "green", "orange", "purple", "brown", "gray"};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(palette::color(i).name, names[i]);
  EXPECT_EQ(palette::for_label(kNoise), palette::kGray);
  EXPECT_EQ(palette::for_label(0), 1u);
  EXPECT_EQ(palette::for_label(5), 6u);
  EXPECT_EQ(palette::for_label(6), 8u);  // skips gray
  std::set<std::string> hexes;
  for (int label = 0; label < 40; ++label) hexes.insert(palette::hex(palette::color(palette::for_label(label))));
  EXPECT_EQ(hexes.size(), 40u);
  EXPECT_EQ(hexes.count(palette::hex(palette::color(palette::kGray))), 0u);
  EXPECT_EQ(palette::hex(palette::color(1)), "#ff0000");
  EXPECT_EQ(palette::color(9).r, palette::color(9).r);  // deterministic
}

TEST(WriteIpe, EmptyDocument) {
  const std::string ipe = write_ipe(golden::empty_page());
  EXPECT_EQ(ipe.rfind("<?xml version=\"1.0\"?>\n", 0), 0u);
  EXPECT_NE(ipe.find("<ipe version=\"70218\" creator=\"proxigraph\">"), std::string::npos);
  EXPECT_EQ(count(ipe, "<page>"), 1u);
  EXPECT_EQ(count(ipe, "<use "), 0u);
  EXPECT_TRUE(golden::well_formed(ipe));
}

TEST(WriteIpe, TwoPointsOneSegment) {
  const std::string ipe = write_ipe(golden::two_points_one_edge());
  EXPECT_EQ(count(ipe, "<use "), 2u);
  EXPECT_EQ(count(ipe, "<path"), 1u);
  EXPECT_NE(ipe.find("<path stroke=\"black\">16 32 m 128 96.5 l</path>"), std::string::npos);
  EXPECT_NE(ipe.find("<use name=\"mark/disk(sx)\" pos=\"16 32\" size=\"normal\" stroke=\"black\"/>"),
            std::string::npos);
  EXPECT_TRUE(golden::well_formed(ipe));
}

TEST(WriteIpe, ClustersAndNoise) {
  Clustering c;
  c.labels = {0, 1, kNoise, 7};
  c.cluster_count = 8;
  const std::string ipe = write_ipe(clustering_document(PointSet{{0, 0}, {1, 0}, {2, 0}, {3, 0}}, c));
  EXPECT_NE(ipe.find("pos=\"0 0\" size=\"normal\" stroke=\"red\""), std::string::npos);
  EXPECT_NE(ipe.find("pos=\"1 0\" size=\"normal\" stroke=\"blue\""), std::string::npos);
  EXPECT_NE(ipe.find("\"mark/cross(sx)\" pos=\"2 0\" size=\"normal\" stroke=\"gray\""), std::string::npos);
  EXPECT_TRUE(golden::well_formed(ipe));
}

TEST(WriteIpe, SoiCircles) {
  const PointSet ps{{0, 0}, {3, 4}, {20, 0}};
  const std::string ipe = write_ipe(soi_document(ps, soi_graph(ps)));
  EXPECT_NE(ipe.find("<path stroke=\"gray\">5 0 0 5 0 0 e</path>"), std::string::npos);
  EXPECT_EQ(count(ipe, " e</path>"), 3u);
}

TEST(WriteIpe, Options) {
  IpeOptions o;
  o.version = "70206";
  o.mark_size = "large";
  const std::string ipe = write_ipe(golden::two_points_one_edge(), o);
  EXPECT_NE(ipe.find("<ipe version=\"70206\""), std::string::npos);
  EXPECT_EQ(count(ipe, "size=\"large\""), 2u);
}

TEST(WriteIpe, RejectsInvalidDocument) {
  Document doc = golden::two_points_one_edge();
  doc.segments.push_back({0, 5});
  EXPECT_PG_ERROR(write_ipe(doc), ErrorKind::InvalidParameter);
  doc = golden::two_points_one_edge();
  doc.marks.pop_back();
  EXPECT_PG_ERROR(write_svg(doc), ErrorKind::InvalidParameter);
}

TEST(WriteIpe, RoundTripAndDeterminism) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> coord(-50'000'000, 50'000'000);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point2> pts;
    std::set<std::pair<long, long>> seen;
    while (pts.size() < 40) {
      const long x = coord(gen), y = coord(gen);
      if (seen.insert({x, y}).second) pts.push_back({x / 1e6, y / 1e6});  // six fractional digits
    }
    const PointSet ps(pts);
    const Document doc = graph_document(ps, neighbor_graph(ps, NeighborVariant(NeighborKind::Knn, 3)));
    const std::string ipe = write_ipe(doc);
    EXPECT_EQ(as_vector(parse_points(ipe, PointFormat::IpeXml)), pts);
    EXPECT_EQ(ipe, write_ipe(doc));
    EXPECT_EQ(write_svg(doc), write_svg(doc));
    EXPECT_TRUE(golden::well_formed(ipe));
    EXPECT_TRUE(golden::well_formed(write_svg(doc)));
  }
}

TEST(WriteSvg, Examples) {
  const std::string empty = write_svg(golden::empty_page());
  EXPECT_NE(empty.find("viewBox=\"0 0 100 100\""), std::string::npos);
  EXPECT_TRUE(golden::well_formed(empty));

  const std::string one = write_svg(graph_document(PointSet{{0, 0}, {10, 0}}, Graph(2, {{0, 1}})));
  EXPECT_EQ(count(one, "<line "), 1u);
  EXPECT_NE(one.find("viewBox=\"-0.5 -0.5 11 1\""), std::string::npos);  // 5% margin, y flipped

  const std::string clusters = write_svg(golden::three_clusters());
  EXPECT_EQ(stroke_colors(clusters).size(), 3u);
  EXPECT_EQ(count(clusters, "r=\"2\""), 6u);
}

TEST(WriteSvg, FlipsY) {
  const std::string svg = write_svg(graph_document(PointSet{{1, 5}, {2, 7}}, Graph(2, {{0, 1}})));
  EXPECT_NE(svg.find("<line x1=\"1\" y1=\"-5\" x2=\"2\" y2=\"-7\""), std::string::npos);
}

TEST(WriteSvg, WellFormedForAllDocumentKinds) {
  std::mt19937_64 gen(5);
  const PointSet ps = oracle::random_points(gen, 30);
  EXPECT_TRUE(golden::well_formed(write_svg(soi_document(ps, soi_graph(ps)))));
  EXPECT_TRUE(golden::well_formed(write_svg(clustering_document(ps, dbscan(ps, {40, 3})))));
  EXPECT_TRUE(golden::well_formed(write_ipe(soi_document(ps, soi_graph(ps)))));
  EXPECT_TRUE(golden::well_formed(write_ipe(clustering_document(ps, dbscan(ps, {40, 3})))));
}

TEST(WriteResultJson, Examples) {
  EXPECT_EQ(write_result_json(Graph(2)), R"({"type":"graph","n":2,"edges":[]})");
  EXPECT_EQ(write_result_json(Graph(3, {{2, 1}, {0, 2}})), R"({"type":"graph","n":3,"edges":[[0,2],[1,2]]})");
  Clustering c;
  c.labels = {0, 0, 1};
  c.cluster_count = 2;
  EXPECT_EQ(write_result_json(c), R"({"type":"clustering","labels":[0,0,1],"noise":-1})");
  c.centers = std::vector<Point2>{{0.5, 0}, {10, 1}};
  EXPECT_EQ(write_result_json(c),
            R"({"type":"clustering","labels":[0,0,1],"noise":-1,"centers":[[0.5,0.0],[10.0,1.0]]})");

  const PointSet far{{0, 0}, {10, 0}, {20, 0}};
  EXPECT_EQ(write_result_json(dbscan(far, {1, 2})),
            R"({"type":"clustering","labels":[-1,-1,-1],"noise":-1})");
}
