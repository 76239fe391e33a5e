#include "catch2/catch_amalgamated.hpp"
#include "schubert/emit.hpp"
#include "test_util.hpp"

using namespace schubert;
using namespace testutil;

namespace {

// Minimal XML well-formedness scan: every opened element must be closed in
// order.  Good enough for the SVG this project emits (no comments, CDATA or
// processing instructions).
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
    if (name.empty()) return false;
    if (!self_closing) stack.push_back(name);
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("weight set JSON matches the documented shape") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");
  const json j = weight_set_json(combinatorial_weights(aba, elem(rs, "a")));
  REQUIRE(j.dump() == R"({"point":"a","word":"aba","weights":[[1,0],[0,-1],[-2,-1]]})");
}

TEST_CASE("roots JSON") {
  auto rs = RootSystem::preset("B2");
  const json j = roots_json(*rs);
  REQUIRE(j["system"] == "B2");
  REQUIRE(j["rank"] == 2);
  REQUIRE(j["cartan"] == json::parse("[[2,-2],[-1,2]]"));
  REQUIRE(j["positive_roots"] == json::parse("[[0,1],[1,0],[1,1],[2,1]]"));
}

TEST_CASE("gallery JSON carries the documented fields") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");
  const json j = gallery_json(gallery(aba, "s1s"));
  REQUIRE(j["word"] == "aba");
  REQUIRE(j["choices"] == json::parse("[true,false,true]"));
  REQUIRE(j["display"] == "s1s");
  REQUIRE(j["target"] == "");
  REQUIRE(j["walls"].size() == 3);
  REQUIRE(j["walls"][0] == json::parse(R"({"step":3,"root":[1,0],"kind":"crossing"})"));
}

TEST_CASE("smoothness JSON matches the documented shape") {
  auto rs = RootSystem::preset("B2");
  const json j = smoothness_json(smoothness_report(elem(rs, "aba")));
  REQUIRE(j["type"] == "B2");
  REQUIRE(j["w"] == "aba");
  REQUIRE(j["l"] == 3);
  REQUIRE(j["rationally_smooth_everywhere"] == true);
  REQUIRE(j["points"].size() == 6);
  REQUIRE(j["points"][0] == json::parse(R"({"u":"","dim":3,"rs":true,"kl":[1]})"));
}

TEST_CASE("DOT output") {
  auto rs = RootSystem::preset("B2");
  const std::string dot = graph_dot(gallery_graph(type_of(rs, "aba")));
  REQUIRE(dot.rfind("graph bs_curves {", 0) == 0);
  REQUIRE(dot.find("\"111\" -- \"s11\" [label=\"phi(1,0)\"]") != std::string::npos);
  REQUIRE(dot.find("rank=same") != std::string::npos);
  REQUIRE(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));

  // deterministic
  REQUIRE(dot == graph_dot(gallery_graph(type_of(rs, "aba"))));
}

TEST_CASE("SVG output") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");
  const std::string svg = apartment_svg(rs, all_galleries(aba));

  REQUIRE(svg.rfind("<svg", 0) == 0);
  REQUIRE(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  REQUIRE(svg.find("</svg>") != std::string::npos);
  REQUIRE(xml_well_formed(svg));
  REQUIRE(svg.find("nan") == std::string::npos);

  const std::string g2 = apartment_svg(RootSystem::preset("G2"),
                                       std::vector<Gallery>{});
  REQUIRE(xml_well_formed(g2));
  std::size_t g2_lines = 0;
  for (std::size_t pos = 0; (pos = g2.find("<line", pos)) != std::string::npos; ++pos) ++g2_lines;
  REQUIRE(g2_lines == 6);

  // one wall line per positive root, one polyline per gallery
  std::size_t lines = 0, polylines = 0;
  for (std::size_t pos = 0; (pos = svg.find("<line", pos)) != std::string::npos; ++pos) ++lines;
  for (std::size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos; ++pos)
    ++polylines;
  REQUIRE(lines == 4);
  REQUIRE(polylines == 8);

  REQUIRE(svg == apartment_svg(rs, all_galleries(aba)));

  REQUIRE_THROWS_MATCHES(apartment_svg(RootSystem::preset("A3"), {}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::unsupported_rank;
                         }));
}
