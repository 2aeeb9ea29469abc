#include "doctest.h"
#include "kribbon/catalog.hpp"
#include "kribbon/homfly.hpp"
#include "kribbon/mp.hpp"
#include "kribbon/ribbon.hpp"

using namespace kribbon;

TEST_SUITE("mp") {
  TEST_CASE("no lone crossings in a torus knot") {
    LinkDiagram d = gen_torus(3).pd;
    auto dec = decompose(d);
    std::string why;
    CHECK_FALSE(mp_legal(d, dec, {0, 0}, &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(try_mp(d, {0, 0}).has_value());
    CHECK_THROWS_AS(mp_reroute(d, {0, 0}), MPError);
    CHECK(r_plus(d).value == 0);
    CHECK(r_minus(d).value == 0);
  }

  TEST_CASE("every legal move on the trefoil double matches its prediction") {
    auto dd = double_diagram(gen_torus(3).pd, 0);
    const LinkDiagram& d = dd.diagram;
    auto dec = decompose(d);
    Laurent h = homfly(d);
    int legal = 0;
    for (int x = 0; x < d.num_crossings(); ++x)
      for (int hug : {0, 1}) {
        MPMove m{x, hug};
        if (!mp_legal(d, dec, m)) continue;
        ++legal;
        CAPTURE(x);
        CAPTURE(hug);
        auto res = reroute_unchecked(d, m);
        CHECK(homfly(res.diagram) == h);
        CHECK(res.origin.size() == static_cast<size_t>(res.diagram.num_crossings()));
        auto pred = predict_mp(d, m);
        CHECK(res.diagram.num_crossings() == pred.crossings);
        CHECK(writhe(res.diagram) == pred.writhe);
        if (auto ok = try_mp(d, m)) CHECK(decompose(ok->diagram).size() == pred.circles);
      }
    CHECK(legal > 0);
  }

  TEST_CASE("exhaustive counts on the trefoil double") {
    const LinkDiagram d = double_diagram(gen_torus(3).pd, 0).diagram;
    auto rp = r_plus(d);
    auto rm = r_minus(d);
    CHECK(rp.exact);
    CHECK(rm.exact);
    CHECK(rp.value >= 1);
    CHECK(rm.value >= 2);
    auto capped = r_minus(d, 1);
    CHECK_FALSE(capped.exact);
  }

  TEST_CASE("certified sequences replay") {
    auto dd = double_diagram(gen_torus(3).pd, 0);
    auto neg = certified_negative_sequence(dd, 0);
    CHECK(neg.steps.size() == 2);
    CHECK(neg.faces.size() == 3);
    std::string why;
    CHECK_MESSAGE(replay(neg, &why), why);
    for (const auto& st : neg.steps) CHECK(st.sign == -1);
    CHECK(homfly(neg.end) == homfly(neg.start));

    std::vector<int> keep(dd.junctions.size(), 3);
    auto pos = certified_positive_sequence(dd, keep, 1);
    CHECK(pos.steps.size() == 1);
    CHECK_MESSAGE(replay(pos, &why), why);
    for (const auto& st : pos.steps) CHECK(st.sign == 1);
  }

  TEST_CASE("tampered sequences fail replay") {
    auto dd = double_diagram(gen_torus(3).pd, 0);
    auto neg = certified_negative_sequence(dd, 0);
    neg.steps[0].circles_before += 1;
    std::string why;
    CHECK_FALSE(replay(neg, &why));
    CHECK_FALSE(why.empty());
    CHECK_THROWS_AS(certified_negative_sequence(dd, -1, dd.junctions[0][0]), MPError);
  }
}
