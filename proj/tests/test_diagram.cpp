#include "doctest.h"
#include "kribbon/catalog.hpp"
#include "kribbon/diagram.hpp"

using namespace kribbon;

namespace {
const char* kTrefoil = "name=T(2,3) components=1\nX+[6,2,1,5]\nX+[2,4,3,1]\nX+[4,6,5,3]\n";
}

TEST_SUITE("diagram") {
  TEST_CASE("parse and write round trip") {
    LinkDiagram d = parse_pd(kTrefoil);
    CHECK(d.num_crossings() == 3);
    CHECK(d.num_components() == 1);
    CHECK(writhe(d) == 3);
    CHECK(to_pd(d, "T(2,3)") == kTrefoil);
    CHECK(parse_pd(to_pd(d)) == d);
  }

  TEST_CASE("labels are renumbered and comments dropped") {
    LinkDiagram d = parse_pd("# header comment\nX+[60, 20 ,10,50]X+[20,40,30,10]\n  X+[40,60,50,30] # tail\r\n");
    CHECK(d == parse_pd(kTrefoil));
  }

  TEST_CASE("free loops") {
    CHECK(parse_pd("name=u").num_components() == 1);
    CHECK(parse_pd_file("# nothing\n").empty());
    CHECK(parse_pd("name=u components=3").free_loops() == 3);
    LinkDiagram d = parse_pd(std::string("name=t components=2\n") + "X+[6,2,1,5]\nX+[2,4,3,1]\nX+[4,6,5,3]\n");
    CHECK(d.free_loops() == 1);
    CHECK_THROWS_AS(parse_pd("components=0\nX+[6,2,1,5]\nX+[2,4,3,1]\nX+[4,6,5,3]\n"), DiagramError);
  }

  TEST_CASE("several records") {
    auto recs = parse_pd_file(std::string(kTrefoil) + to_pd(mirror(parse_pd(kTrefoil)), "other"));
    REQUIRE(recs.size() == 2);
    CHECK(recs[1].name == "other");
    CHECK_THROWS_AS(parse_pd(std::string(kTrefoil) + kTrefoil), DiagramError);
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_WITH_AS(parse_pd("X+[1,2,3]"), doctest::Contains("line 1"), DiagramError);
    CHECK_THROWS_AS(parse_pd("X*[1,2,3,4]"), DiagramError);
    CHECK_THROWS_AS(parse_pd("foo=1"), DiagramError);
    CHECK_THROWS_WITH_AS(parse_pd("X+[1,2,3,3]\nX+[1,2,4,5]"), doctest::Contains("multiplicity"), DiagramError);
    CHECK_THROWS_WITH_AS(parse_pd("X+[1,2,2,1]"), doctest::Contains("orientation"), DiagramError);
  }

  TEST_CASE("non-planar rotation is rejected") {
    // A single crossing whose rotation system lives on a torus.
    CHECK_THROWS_WITH_AS(parse_pd("X+[1,2,1,2]"), doctest::Contains("non-planar"), DiagramError);
  }

  TEST_CASE("operations") {
    LinkDiagram d = parse_pd(kTrefoil);
    CHECK(writhe(mirror(d)) == -3);
    CHECK(mirror(mirror(d)) == d);
    CHECK(writhe(switch_crossing(d, 0)) == 1);
    LinkDiagram s = smooth_crossing(d, 0);
    CHECK(s.num_crossings() == 2);
    CHECK(s.num_components() == 2);
    CHECK(is_alternating(d));
    CHECK(is_special_alternating(d));
    CHECK(is_reduced(d));
    CHECK(simplify(switch_crossing(d, 0)).num_crossings() == 0);
    LinkDiagram u = disjoint_union(d, d);
    CHECK(u.num_components() == 2);
    CHECK(connected_pieces(u).size() == 2);
    LinkDiagram sum = connected_sum(d, d);
    CHECK(sum.num_components() == 1);
    CHECK(connected_pieces(sum).size() == 1);
    CHECK(diagram_faces(d).size() == 5);
  }

  TEST_CASE("component reversal and linking data") {
    LinkDiagram hopf = diagram_from_plane_graph(weighted_plane_graph(2, {{0, 1}}, {2}, {{0}, {0}}));
    CHECK(hopf.num_components() == 2);
    CHECK(writhe(hopf) == 2);
    CHECK(writhe(reverse_component(hopf, 1)) == -2);
    CHECK_THROWS_AS(reverse_component(hopf, 3), DiagramError);
  }

  TEST_CASE("canonical keys ignore labelling") {
    LinkDiagram a = parse_pd(kTrefoil);
    LinkDiagram b = parse_pd("X+[2,4,3,1]\nX+[4,6,5,3]\nX+[6,2,1,5]");
    CHECK(canonical_form(a).key == canonical_form(b).key);
    CHECK(canonical_form(a).key != canonical_form(mirror(a)).key);
  }
}
