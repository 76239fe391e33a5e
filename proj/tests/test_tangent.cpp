#include <map>

#include "catch2/catch_amalgamated.hpp"
#include "test_util.hpp"

using namespace schubert;
using namespace testutil;

// Hand-computed slot profiles for type aba over B2 pin down the class
// structure.  Slots are [B_3, P_3, B_2, P_2, B_1, P_1, B_0, P_0], indices 0-7.

TEST_CASE("tangent classes of the fully folded gallery") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");

  const auto classes = bs_tangent_classes(gallery(aba, "111"));
  REQUIRE(classes.size() == 3);
  REQUIRE(std::count(classes.begin(), classes.end(), TangentClass{root({0, -1}), 4, 7}) == 1);
  REQUIRE(std::count(classes.begin(), classes.end(), TangentClass{root({-1, 0}), 2, 4}) == 1);
  REQUIRE(std::count(classes.begin(), classes.end(), TangentClass{root({-1, 0}), 6, 7}) == 1);

  REQUIRE(weight_set(contributing_weights(gallery(aba, "111"))) ==
          roots_of({{-1, 0}, {0, -1}}));
}

TEST_CASE("every aba gallery has exactly three classes") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");
  for (const Gallery& g : all_galleries(aba)) REQUIRE(bs_tangent_classes(g).size() == 3);
}

TEST_CASE("per-gallery contributions for type aba") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");

  REQUIRE(weight_set(contributing_weights(gallery(aba, "s1s"))) ==
          roots_of({{-1, 0}, {-2, -1}}));
  REQUIRE(weight_set(contributing_weights(gallery(aba, "s11"))) ==
          roots_of({{1, 0}, {-2, -1}}));
  REQUIRE(weight_set(contributing_weights(gallery(aba, "11s"))) ==
          roots_of({{1, 0}, {0, -1}}));
  REQUIRE(weight_set(contributing_weights(gallery(aba, "ss1"))) ==
          roots_of({{1, 0}, {2, 1}, {-1, -1}}));
  REQUIRE(weight_set(contributing_weights(gallery(aba, "sss"))) ==
          roots_of({{1, 0}, {1, 1}, {2, 1}}));

  // the class of alpha+beta reaches the final slot on the minimal gallery
  bool found = false;
  for (const TangentClass& c : bs_tangent_classes(gallery(aba, "sss")))
    found |= c.root == root({1, 1}) && c.last_slot == 7;
  REQUIRE(found);
}

TEST_CASE("combinatorial tangent spaces match the worked example") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");

  REQUIRE(weight_set(combinatorial_weights(aba, elem(rs, "a")).weights) ==
          roots_of({{1, 0}, {0, -1}, {-2, -1}}));
  REQUIRE(weight_set(combinatorial_weights(aba, elem(rs, "ab")).weights) ==
          roots_of({{1, 0}, {2, 1}, {-1, -1}}));
  REQUIRE(weight_set(combinatorial_weights(aba, WeylElement::identity(rs)).weights) ==
          roots_of({{-1, 0}, {0, -1}, {-2, -1}}));

  REQUIRE_THROWS_MATCHES(combinatorial_weights(type_of(rs, "a"), elem(rs, "b")), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::not_in_schubert;
                         }));
}

TEST_CASE("closed form weights") {
  auto rs = RootSystem::preset("B2");
  const WeylElement w = elem(rs, "aba");

  REQUIRE(weight_set(weights_closed_form(elem(rs, "a"), w, {}).weights) ==
          roots_of({{1, 0}, {0, -1}, {-2, -1}}));
  REQUIRE(weight_set(weights_closed_form(w, w, {}).weights) ==
          roots_of({{1, 0}, {1, 1}, {2, 1}}));
  REQUIRE(weight_set(weights_closed_form(WeylElement::identity(rs), w, {}).weights) ==
          roots_of({{-1, 0}, {0, -1}, {-2, -1}}));

  REQUIRE_THROWS_AS(weights_closed_form(elem(rs, "b"), elem(rs, "a"), {}), error);
}

TEST_CASE("weight sets avoid the target parabolic and pair each wall once") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");
  for (const WeylElement& u : enumerate_interval(WeylElement::identity(rs), elem(rs, "aba"))) {
    const WeightSet ws = combinatorial_weights(aba, u);
    std::set<Root> seen;
    for (const Root& m : ws.weights) {
      REQUIRE_FALSE(seen.count(-m));  // at most one of {m, -m}
      seen.insert(m);
    }
    // weights avoid u(R+): none of them lies in the Borel at the point
    for (const Root& m : ws.weights) REQUIRE_FALSE(ws.point.act_inverse(m).is_positive());
  }
}

TEST_CASE("T-invariant curves") {
  auto rs = RootSystem::preset("B2");
  const WeylElement w = elem(rs, "aba");

  const auto curves = t_invariant_curves(elem(rs, "a"), w, {});
  REQUIRE(curves.size() == 3);
  std::map<Root, std::string> endpoints;
  for (const auto& [beta, other] : curves) endpoints[beta] = word_string(other);
  REQUIRE(endpoints == std::map<Root, std::string>{
                           {root({1, 0}), ""}, {root({0, 1}), "ba"}, {root({2, 1}), "ab"}});

  REQUIRE(t_invariant_curves(WeylElement::identity(rs), WeylElement::identity(rs), {}).empty());
  REQUIRE(t_invariant_curves(w, w, {}).size() == 3);
}

TEST_CASE("gallery graph of type aba") {
  auto rs = RootSystem::preset("B2");
  auto aba = type_of(rs, "aba");
  const GalleryGraph graph = gallery_graph(aba);

  REQUIRE(graph.vertices.size() == 8);
  REQUIRE(graph.edges.size() == 12);
  std::vector<int> degree(8, 0);
  for (const auto& e : graph.edges) {
    ++degree[static_cast<std::size_t>(e.a)];
    ++degree[static_cast<std::size_t>(e.b)];
  }
  for (int d : degree) REQUIRE(d == 3);

  // bottom row is the single minimal gallery
  int bottom = 0;
  for (std::size_t k = 0; k < graph.vertices.size(); ++k)
    if (graph.row(static_cast<int>(k)) == 3) {
      REQUIRE(graph.vertices[k] == gallery(aba, "sss"));
      ++bottom;
    }
  REQUIRE(bottom == 1);

  // the edge between "111" and "s11" is the fold at the alpha wall
  bool found = false;
  for (const auto& e : graph.edges) {
    const std::string a = graph.vertices[static_cast<std::size_t>(e.a)].display();
    const std::string b = graph.vertices[static_cast<std::size_t>(e.b)].display();
    if ((a == "111" && b == "s11") || (a == "s11" && b == "111")) {
      REQUIRE(e.wall == root({1, 0}));
      REQUIRE(e.fold);
      found = true;
    }
  }
  REQUIRE(found);
}

TEST_CASE("weights read off the graph") {
  auto rs = RootSystem::preset("B2");
  const GalleryGraph graph = gallery_graph(type_of(rs, "aba"));

  REQUIRE(weight_set(weights_from_graph(graph, elem(rs, "a")).weights) ==
          roots_of({{1, 0}, {0, -1}, {-2, -1}}));
  REQUIRE(weight_set(weights_from_graph(graph, elem(rs, "ab")).weights) ==
          roots_of({{1, 0}, {2, 1}, {-1, -1}}));
  REQUIRE(weight_set(weights_from_graph(graph, elem(rs, "aba")).weights) ==
          roots_of({{1, 0}, {1, 1}, {2, 1}}));

  const GalleryGraph small = gallery_graph(type_of(rs, "a"));
  REQUIRE_THROWS_MATCHES(weights_from_graph(small, elem(rs, "b")), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::point_not_in_graph;
                         }));
}

TEST_CASE("parabolic tangent spaces: type ab over W_{a}") {
  auto rs = RootSystem::preset("B2");
  auto typ = type_of(rs, "ab", "a");
  const WeylElement e = WeylElement::identity(rs);

  REQUIRE(weight_set(combinatorial_weights(typ, e).weights) == roots_of({{0, -1}, {-2, -1}}));
  REQUIRE(weight_set(weights_closed_form(e, typ->top(), {0}).weights) ==
          roots_of({{0, -1}, {-2, -1}}));
  REQUIRE(weight_set(weights_closed_form(elem(rs, "ab"), typ->top(), {0}).weights) ==
          roots_of({{1, 0}, {2, 1}}));

  // the graph has a within-row fold edge, which contributes nothing
  const GalleryGraph graph = gallery_graph(typ);
  REQUIRE(graph.vertices.size() == 4);
  REQUIRE(weight_set(weights_from_graph(graph, e).weights) == roots_of({{0, -1}, {-2, -1}}));
}

TEST_CASE("weight signs match the wall geometry") {
  // Positive weights sit on walls separating the base chamber from the
  // point and some fiber gallery crosses them; negative weights sit on
  // non-separating walls not containing the target face and some fiber
  // gallery bends on them.
  auto rs = RootSystem::preset("B2");
  for (const auto& [word, parabolic] : std::vector<std::pair<std::string, std::string>>{
           {"aba", ""}, {"ab", "a"}, {"bab", "a"}}) {
    auto typ = type_of(rs, word, parabolic);
    for (const WeylElement& u :
         enumerate_interval(WeylElement::identity(rs), typ->top())) {
      if (!is_min_coset_rep(u, typ->target_type())) continue;
      const auto fiber = enumerate_fiber(typ, u);
      auto fiber_meets = [&](const Root& wall, bool crossing) {
        for (const Gallery& g : fiber)
          for (int j = 1; j <= g.r(); ++j) {
            const WallInfo wi = wall_at(g, j);
            if (wi.wall == wall && wi.crossing == crossing) return true;
          }
        return false;
      };
      for (const Root& m : combinatorial_weights(typ, u).weights) {
        const Root base = canonical_positive(m);
        if (m.is_positive()) {
          REQUIRE_FALSE(u.act_inverse(m).is_positive());  // separating
          REQUIRE(fiber_meets(base, true));
        } else {
          REQUIRE(u.act_inverse(base).is_positive());  // not separating
          REQUIRE(min_coset_rep(reflection_for_root(rs, base) * u, typ->target_type()) != u);
          REQUIRE(fiber_meets(base, false));
        }
      }
    }
  }
}

TEST_CASE("empty word gives a zero-dimensional tangent space") {
  auto rs = RootSystem::preset("B2");
  auto typ = type_of(rs, "");
  const WeylElement e = WeylElement::identity(rs);
  REQUIRE(combinatorial_weights(typ, e).dim() == 0);
  REQUIRE(weights_closed_form(e, e, {}).dim() == 0);
  REQUIRE(bs_tangent_classes(gallery(typ, "")).empty());
}
