#include <algorithm>

#include "doctest.h"
#include "kribbon/catalog.hpp"
#include "kribbon/seifert.hpp"

using namespace kribbon;

TEST_SUITE("seifert") {
  TEST_CASE("trefoil circles and graph") {
    LinkDiagram d = gen_torus(3).pd;
    auto dec = decompose(d);
    CHECK(dec.size() == 2);
    auto g = seifert_graph(d, dec);
    CHECK(g.num_vertices == 2);
    CHECK(g.num_edges() == 3);
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.faces.size() == 3);
    CHECK(g.embedded);
    CHECK(lone_crossings(g).empty());
    auto we = weighted_edges(g);
    REQUIRE(we.size() == 1);
    CHECK(we[0].weight() == 3);
  }

  TEST_CASE("shape over the catalog") {
    for (const auto& e : builtin_catalog()) {
      CAPTURE(e.name);
      auto g = seifert_graph(e.pd);
      CHECK(g.num_vertices == e.s);
      CHECK(g.num_edges() == e.c);
      CHECK(static_cast<int>(g.faces.size()) == e.c - e.s + 2);
      for (const auto& edge : g.edges) CHECK(edge.sign == 1);
      CHECK(connected_without(g, {}));
    }
  }

  TEST_CASE("plane graph round trip") {
    // Square with weights 2, 1, 2, 3.
    PlaneGraph pg = weighted_plane_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {2, 1, 2, 3}, {{0, 3}, {0, 1}, {1, 2}, {2, 3}});
    LinkDiagram d = diagram_from_plane_graph(pg);
    CHECK(realizes(d, pg));
    auto g = seifert_graph(d);
    CHECK(g.num_vertices == 4);
    CHECK(g.num_edges() == 8);
    CHECK(static_cast<int>(g.faces.size()) == count_faces(pg));
  }

  TEST_CASE("bridges and lone crossings") {
    // Two trefoil circles chained: weights 3 and 1 in a path.
    PlaneGraph pg = weighted_plane_graph(3, {{0, 1}, {1, 2}}, {3, 1}, {{0}, {0, 1}, {1}});
    LinkDiagram d = diagram_from_plane_graph(pg);
    auto g = seifert_graph(d);
    auto lone = lone_crossings(g);
    REQUIRE(lone.size() == 1);
    CHECK(is_bridge(g, lone[0]));
    CHECK_FALSE(is_bridge(g, 0));
  }

  TEST_CASE("properness agrees across characterisations") {
    auto entries = builtin_catalog();
    for (auto& e : counter_fixtures()) entries.push_back(e);
    int improper = 0;
    for (const auto& e : entries) {
      CAPTURE(e.name);
      auto g = seifert_graph(e.pd);
      bool p = is_proper(g).proper;
      bool trees = true;
      for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) trees = trees && good_spanning_tree(g, f).has_value();
      CHECK(p == trees);
      CHECK(p == maximal_2cut_sets(g).empty());
      improper += !p;
    }
    CHECK(improper > 0);
  }

  TEST_CASE("good spanning trees avoid their face") {
    auto g = seifert_graph(gen_torus(5).pd);
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
      auto t = good_spanning_tree(g, f);
      REQUIRE(t.has_value());
      CHECK(static_cast<int>(t->size()) == g.num_vertices - 1);
      for (int e : *t) CHECK(std::find(g.faces[static_cast<size_t>(f)].begin(), g.faces[static_cast<size_t>(f)].end(), e) ==
                            g.faces[static_cast<size_t>(f)].end());
    }
  }

  TEST_CASE("graph json") {
    auto js = graph_json(seifert_graph(gen_torus(3).pd));
    CHECK(js.find("faces") != std::string::npos);
  }
}
