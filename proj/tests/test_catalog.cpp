#include <set>

#include "doctest.h"
#include "json.hpp"
#include "kribbon/catalog.hpp"
#include "kribbon/seifert.hpp"

using namespace kribbon;

TEST_SUITE("catalog") {
  TEST_CASE("torus generators") {
    for (int n : {3, 5, 7}) {
      auto e = gen_torus(n);
      CHECK(e.c == n);
      CHECK(e.s == 2);
      CHECK(e.w == n);
      CHECK(e.pd.num_components() == 1);
    }
    CHECK_THROWS_AS(gen_torus(4), CatalogError);
    CHECK_THROWS_AS(gen_torus(1), CatalogError);
  }

  TEST_CASE("builtin entries satisfy the catalog filters") {
    const auto& cat = builtin_catalog();
    CHECK(cat.size() == 25);
    std::set<std::string> names, keys;
    for (const auto& e : cat) {
      CAPTURE(e.name);
      CHECK(names.insert(e.name).second);
      CHECK(keys.insert(canonical_form(e.pd).key).second);
      CHECK(e.pd.num_components() == 1);
      CHECK(is_reduced(e.pd));
      CHECK(is_special_alternating(e.pd));
      auto dec = decompose(e.pd);
      CHECK(nesting_free(e.pd, dec));
      CHECK(flype_normalized(e.pd, dec));
      CHECK(e.c == e.pd.num_crossings());
      CHECK(e.s == dec.size());
      CHECK(e.w == writhe(e.pd));
      CHECK_FALSE(e.counter_fixture);
      CHECK(find_entry(e.name) == &e);
    }
    CHECK(find_entry("no-such-entry") == nullptr);
  }

  TEST_CASE("counter fixtures fail flype normality") {
    for (const auto& e : counter_fixtures()) {
      CAPTURE(e.name);
      CHECK(e.counter_fixture);
      CHECK(e.pd.num_components() == 1);
      CHECK_FALSE(flype_normalized(e.pd, decompose(e.pd)));
      CHECK(find_entry(e.name) != nullptr);
    }
  }

  TEST_CASE("plane graph helpers") {
    PlaneGraph theta = weighted_plane_graph(2, {{0, 1}}, {3}, {{0}, {0}});
    CHECK(theta.edges.size() == 3);
    CHECK(is_plane(theta));
    CHECK(count_faces(theta) == 3);
    CHECK(bipartition(theta).size() == 2);
    PlaneGraph tri = weighted_plane_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 1}, {{0, 2}, {1, 0}, {2, 1}});
    CHECK(bipartition(tri).empty());
    CHECK(realizes(diagram_from_plane_graph(theta), theta));
    CHECK(realizes(gen_torus(3).pd, theta));
  }

  TEST_CASE("entry json") {
    auto j = nlohmann::json::parse(entry_json(gen_torus(5)));
    CHECK(j["name"] == "T(2,5)");
    CHECK(j["c"] == 5);
    CHECK(parse_pd(j["pd"].get<std::string>()) == gen_torus(5).pd);
  }
}
