#include <filesystem>

#include "doctest.h"
#include "kribbon/catalog.hpp"
#include "kribbon/homfly.hpp"
#include "kribbon/ribbon.hpp"

using namespace kribbon;

namespace {
Laurent m(long c, int a, int z) { return Laurent::monomial(c, a, z); }
}

TEST_SUITE("homfly") {
  TEST_CASE("unknots and unlinks") {
    CHECK(homfly(parse_pd("name=u")) == Laurent(1));
    CHECK(homfly(parse_pd("components=3")) == delta_power(2));
    // One-crossing kink.
    CHECK(homfly(parse_pd("X+[1,1,2,2]")) == Laurent(1));
  }

  TEST_CASE("torus knots") {
    Laurent t3 = -m(1, -4, 0) + m(2, -2, 0) + m(1, -2, 2);
    CHECK(homfly(gen_torus(3).pd) == t3);
    CHECK(homfly(mirror(gen_torus(3).pd)) == mirror_substitute(t3));
    auto b = bounds(t3);
    CHECK(b.E == -2);
    CHECK(b.e == -4);
    CHECK(b.p0h == ZMonomial{1, 2});
    CHECK(b.p0l == ZMonomial{-1, 0});
    CHECK(b.xi == 2);
  }

  TEST_CASE("figure eight") {
    LinkDiagram d = parse_pd("X+[4,2,5,1]\nX+[8,6,1,5]\nX-[6,3,7,4]\nX-[2,7,3,8]");
    Laurent h = homfly(d);
    CHECK(h == mirror_substitute(h));
    CHECK(h == m(1, -2, 0) - Laurent(1) + m(1, 2, 0) - m(1, 0, 2));
  }

  TEST_CASE("skein relation at every crossing of 5_1") {
    LinkDiagram d = gen_torus(5).pd;
    HomflyEngine eng;
    for (int x = 0; x < d.num_crossings(); ++x) {
      Laurent lhs = m(1, 1, 0) * eng.compute(d) - m(1, -1, 0) * eng.compute(switch_crossing(d, x));
      CHECK(lhs == m(1, 0, 1) * eng.compute(smooth_crossing(d, x)));
    }
  }

  TEST_CASE("sum identities") {
    HomflyEngine eng;
    auto out = sum_identities(eng, gen_torus(3).pd, gen_torus(5).pd);
    CHECK_MESSAGE(out.pass, out.detail);
  }

  TEST_CASE("inequality checks") {
    for (const auto& e : builtin_catalog()) {
      if (e.c > 8) continue;
      CAPTURE(e.name);
      Laurent h = homfly(e.pd);
      CHECK(mfw_check(e.pd, h).pass);
      CHECK(positive_diagram_check(e.pd, h).pass);
    }
    LinkDiagram t = gen_torus(3).pd;
    CHECK_FALSE(reduction_bound_check(t, homfly(t), 0, 5).pass);
  }

  TEST_CASE("budget and cap") {
    HomflyEngine tiny(HomflyConfig{10, 24, 1});
    CHECK_THROWS_AS(tiny.compute(double_diagram(gen_torus(3).pd, 0).diagram), BudgetExceeded);
    HomflyEngine capped(HomflyConfig{100'000'000, 4, 1});
    CHECK_THROWS(capped.compute(gen_torus(5).pd));
  }

  TEST_CASE("cache file round trip") {
    auto file = std::filesystem::temp_directory_path() / "kribbon_unit_cache.tsv";
    std::filesystem::remove(file);
    HomflyEngine a;
    Laurent h = a.compute(gen_torus(5).pd);
    a.save_cache(file);
    HomflyEngine b;
    CHECK(b.load_cache(file) > 0);
    CHECK(b.compute(gen_torus(5).pd) == h);
    CHECK(b.stats().nodes == 0);
    std::filesystem::remove(file);
  }
}
