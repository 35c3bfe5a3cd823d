#include "bgw/catalog.hpp"
#include "bgw/diagram.hpp"
#include "bgw/named_groups.hpp"
#include "bgw/verify.hpp"

#include "doctest.h"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace bgw;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

bool well_formed(const std::string& xml) {
  std::istringstream in(xml);
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error&) {
    return false;
  }
  return tree.count("svg") == 1;
}

// Strand permutation of a bundles diagram written on the points of the block
// system {0,4},{1,5},{2,6},{3,7}: slot 2r + l is point r + 4l.
Perm on_points(const DiagramSpec& d) {
  std::vector<int> img(8);
  for (int s = 0; s < 8; ++s) {
    int t = d.path[static_cast<std::size_t>(s)];
    img[static_cast<std::size_t>(s / 2 + 4 * (s % 2))] = t / 2 + 4 * (t % 2);
  }
  return Perm(img);
}

std::vector<DiagramStyle> styles_for(const Embedding& e) {
  std::vector<DiagramStyle> out = {DiagramStyle::beads, DiagramStyle::bundles};
  if (is_cyclic(*e.base)) out.push_back(DiagramStyle::twists);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("identity diagrams") {
  auto e = named_embedding("item1");
  auto d = diagram_from_wreath(e.image(e.domain->identity()), DiagramStyle::beads);
  for (const auto& b : d.beads) CHECK(b.empty());
  auto text = render(d, DiagramFormat::ascii);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "|   |   |   |");
  std::getline(in, line);
  CHECK(line == "|   |   |   |");
  std::getline(in, line);
  CHECK(line == "0   1   2   3");
  CHECK(count(render(d, DiagramFormat::svg), "<circle") == 0);
}

TEST_CASE("ribbons of j in the antipodal embedding") {
  const auto& q = catalog_group("q8");
  auto e = named_embedding("item1");
  auto d = diagram_from_wreath(e.image(eval_expr(q, "j")), DiagramStyle::twists);
  CHECK(cycles_print(Perm(d.path), 1) == "(1,2)(3,4)");
  CHECK(d.modulus == 2);
  CHECK(d.twist == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("item 2: i swaps the two bundles") {
  const auto& q = catalog_group("q8");
  auto e = named_embedding("item2");
  auto d = diagram_from_wreath(e.image(eval_expr(q, "i")), DiagramStyle::twists, "i");
  CHECK(d.modulus == 4);
  CHECK(d.path == std::vector<int>{1, 0});
  // i carries (-i,-k,i,k) onto (1,j,-1,-j): two quarter-twists on strand 0
  CHECK(d.twist == std::vector<int>{2, 0});
  // a quarter-twist is multiplication by j
  CHECK(q.group->index_of(e.base->element(d.generator)) == eval_expr(q, "j"));
  auto dj = diagram_from_wreath(e.image(eval_expr(q, "j")), DiagramStyle::twists);
  CHECK(dj.twist == std::vector<int>{1, 3});
  auto svg = render(d, DiagramFormat::svg);
  CHECK(well_formed(svg));
  CHECK(count(svg, "<path") == 2);
  CHECK(count(svg, "<rect") == 2);
}

TEST_CASE("twist style needs cyclic beads") {
  const auto& bo = catalog_group("binary-octahedral");
  auto e = named_embedding("item9");
  auto w = e.image(eval_expr(bo, "f"));
  CHECK_THROWS_AS(diagram_from_wreath(w, DiagramStyle::twists), std::invalid_argument);
  auto d = diagram_from_wreath(w, DiagramStyle::beads);
  CHECK(d.path == std::vector<int>{0, 2, 1});
  CHECK(extract(d) == w);
}

TEST_CASE("stacking the ribbons of a") {
  const auto& bt = catalog_group("binary-tetrahedral");
  auto e = named_embedding("tetrahedral-ribbons");
  auto a = diagram_from_wreath(e.image(eval_expr(bt, "a")), DiagramStyle::bundles);
  auto a2 = stack(a, a);
  CHECK(cycles_print_compact(on_points(a2)) == "(136)(257)");
  CHECK(extract(a2) == e.image(eval_expr(bt, "a^2")));
  auto a3 = stack(a2, a);
  CHECK(cycles_print_compact(on_points(a3)) == "(04)(15)(26)(37)");
  CHECK(a3 == diagram_from_wreath(e.image(eval_expr(bt, "-1")), DiagramStyle::bundles));

  auto id = diagram_from_wreath(e.image(bt.group->identity()), DiagramStyle::bundles);
  CHECK(stack(a, id) == a);
  CHECK(stack(id, a) == a);
}

TEST_CASE("stack rejects mismatched diagrams") {
  const auto& q = catalog_group("q8");
  auto e1 = named_embedding("item1");
  auto e2 = named_embedding("item2");
  auto d1 = diagram_from_wreath(e1.image(eval_expr(q, "i")), DiagramStyle::beads);
  auto d2 = diagram_from_wreath(e2.image(eval_expr(q, "i")), DiagramStyle::beads);
  auto d3 = diagram_from_wreath(e1.image(eval_expr(q, "i")), DiagramStyle::bundles);
  CHECK_THROWS_AS(stack(d1, d2), std::invalid_argument);
  CHECK_THROWS_AS(stack(d1, d3), std::invalid_argument);
}

TEST_CASE("extract rejects malformed diagrams") {
  const auto& q = catalog_group("q8");
  auto e = named_embedding("item1");
  auto d = diagram_from_wreath(e.image(eval_expr(q, "k")), DiagramStyle::bundles);
  auto bad = d;
  std::swap(bad.path[0], bad.path[2]);  // a ribbon splits
  CHECK_THROWS_AS(extract(bad), std::invalid_argument);
  bad = d;
  bad.path[0] = bad.path[1];
  CHECK_THROWS_AS(extract(bad), std::invalid_argument);
  auto b = diagram_from_wreath(e.image(eval_expr(q, "k")), DiagramStyle::beads);
  b.beads[0] = "nonsense";
  CHECK_THROWS_AS(extract(b), std::invalid_argument);
}

TEST_CASE("round trip and functoriality on every representation") {
  std::mt19937 rng(2024);
  for (const auto& key : embedding_keys()) {
    CAPTURE(key);
    auto e = named_embedding(key);
    int n = e.domain->order();
    for (auto style : styles_for(e)) {
      CAPTURE(to_string(style));
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) ok = extract(diagram_from_wreath(e.image(g), style)) == e.image(g);
      CHECK(ok);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int t = 0; t < 1000 && ok; ++t) {
        int g = pick(rng);
        int h = pick(rng);
        auto d = stack(diagram_from_wreath(e.image(g), style), diagram_from_wreath(e.image(h), style));
        ok = extract(d) == e.image(e.domain->mul(g, h));
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("svg output is well formed and stable") {
  for (const auto& key : {"item1", "item5", "item10", "sigma4-nested"}) {
    CAPTURE(key);
    auto e = named_embedding(key);
    for (int g = 0; g < e.domain->order(); g += 5) {
      for (auto style : styles_for(e)) {
        auto d = diagram_from_wreath(e.image(g), style, "<caption & " + std::to_string(g) + ">");
        auto svg = render(d, DiagramFormat::svg);
        REQUIRE(well_formed(svg));
        CHECK(count(svg, "<path") == d.strands);
        CHECK(svg == render(diagram_from_wreath(e.image(g), style, "<caption & " + std::to_string(g) + ">"),
                            DiagramFormat::svg));
      }
    }
  }
}

TEST_CASE("golden svg for the eight elements of Q8") {
  const auto& q = catalog_group("q8");
  auto e = named_embedding("item2");
  const std::vector<std::pair<std::string, std::string>> files = {
      {"1", "q8-1"},  {"-1", "q8-neg1"}, {"i", "q8-i"}, {"-1*i", "q8-negi"},
      {"j", "q8-j"},  {"-1*j", "q8-negj"}, {"k", "q8-k"}, {"-1*k", "q8-negk"}};
  for (const auto& [expr, file] : files) {
    CAPTURE(file);
    int g = eval_expr(q, expr);
    auto d = diagram_from_wreath(e.image(g), DiagramStyle::twists, catalog_repr(q, g));
    auto svg = render(d, DiagramFormat::svg);
    auto golden = read_file(golden_dir() + "/svg/" + file + ".svg");
    REQUIRE_FALSE(golden.empty());
    CHECK(svg == golden);
  }
}
