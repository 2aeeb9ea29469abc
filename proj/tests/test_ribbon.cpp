#include "doctest.h"
#include "kribbon/catalog.hpp"
#include "kribbon/homfly.hpp"
#include "kribbon/ribbon.hpp"

using namespace kribbon;

TEST_SUITE("ribbon") {
  TEST_CASE("untwisted trefoil double structure") {
    LinkDiagram d = gen_torus(3).pd;
    auto dd = double_diagram(d, 0);
    CHECK(dd.diagram.num_crossings() == 12);
    CHECK(dd.diagram.num_components() == 2);
    CHECK(dd.dec.size() == 8);
    CHECK(writhe(dd.diagram) == 0);
    CHECK(dd.count(CircleClass::Large) == 2);
    CHECK(dd.count(CircleClass::Medium) == 3);
    CHECK(dd.count(CircleClass::Small) == 3);
    CHECK(dd.count(CircleClass::Twist) == 0);
    CHECK(dd.junctions.size() == 3);
    CHECK(dd.C_set.size() == 3);
    CHECK(crossing_set_C(dd) == dd.C_set);
    for (const auto& cc : structural_counts(dd)) CHECK_MESSAGE(cc.pass(), cc.name);
    CHECK(flipped_C_splits(dd));
  }

  TEST_CASE("twists add crossings and linking") {
    LinkDiagram d = gen_torus(3).pd;
    for (int k : {-4, -1, 2, 5}) {
      CAPTURE(k);
      auto dd = double_diagram(d, k);
      CHECK(dd.diagram.num_crossings() == 12 + 2 * std::abs(k));
      CHECK(static_cast<int>(dd.twist_crossings.size()) == 2 * std::abs(k));
      CHECK(linking_number(dd.diagram) == k - 3);
    }
  }

  TEST_CASE("mid diagram of the trefoil") {
    LinkDiagram mid = mid_diagram(gen_torus(3).pd);
    CHECK(mid.num_crossings() == 6);
    auto b = bounds(homfly(mid));
    CHECK(b.e == 2 - 9 - 1);
    CHECK(b.p0l == ZMonomial{1, -2});
    auto sp = predict_structure(gen_torus(3).pd);
    CHECK(sp.mid_e == b.e);
    CHECK(sp.mid_p0l == b.p0l);
    CHECK(sp.double_E == 3);
    CHECK(sp.double_e == -5);
  }

  TEST_CASE("case table against computed doubles") {
    LinkDiagram d = gen_torus(3).pd;
    HomflyEngine eng;
    for (int k : {-3, -1, 0, 1, 4}) {
      CAPTURE(k);
      auto got = bounds(eng.compute(double_diagram(d, k).diagram));
      auto want = predict_bounds(d, k);
      CHECK(got.E == want.E);
      CHECK(got.e == want.e);
      CHECK(got.p0h == want.p0h);
      CHECK(got.p0l == want.p0l);
      CHECK(got.xi == braid_index_bound(d, k));
    }
  }

  TEST_CASE("hat diagrams") {
    auto dd = double_diagram(gen_torus(3).pd, 0);
    HomflyEngine eng;
    for (int mask : {0, 1, 3}) {
      CAPTURE(mask);
      std::vector<int> keep(dd.junctions.size(), mask);
      LinkDiagram hat = hat_diagram(dd, keep);
      int kept = static_cast<int>(dd.junctions.size()) * __builtin_popcount(static_cast<unsigned>(mask));
      CHECK(hat.num_crossings() == 6 + kept);
      auto b = bounds(eng.compute(hat));
      auto hp = predict_hat(kept, dd.count(CircleClass::Large), dd.count(CircleClass::Medium));
      CHECK(b.e == hp.e);
      CHECK(b.p0l == hp.p0l);
    }
  }

  TEST_CASE("inputs outside the hypotheses are rejected") {
    for (const auto& e : counter_fixtures()) {
      CAPTURE(e.name);
      CHECK_THROWS_AS(double_diagram(e.pd, 0), RibbonError);
    }
    CHECK_THROWS_AS(double_diagram(parse_pd("X+[4,2,5,1]\nX+[8,6,1,5]\nX-[6,3,7,4]\nX-[2,7,3,8]"), 0), RibbonError);
  }
}
