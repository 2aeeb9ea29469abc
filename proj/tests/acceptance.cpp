// One PASS/FAIL line per acceptance criterion.  Exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "kribbon/catalog.hpp"
#include "kribbon/homfly.hpp"
#include "kribbon/mp.hpp"
#include "kribbon/ribbon.hpp"
#include "kribbon/seifert.hpp"

using namespace kribbon;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

Laurent mono(long c, int a, int z) { return Laurent::monomial(c, a, z); }

LinkDiagram parallel_torus_link(int n) {
  return diagram_from_plane_graph(weighted_plane_graph(2, {{0, 1}}, {n}, {{0}, {0}}));
}

const LinkDiagram& trefoil() {
  static const LinkDiagram d = gen_torus(3).pd;
  return d;
}

std::string show(const BoundsReport& b) {
  return "E=" + std::to_string(b.E) + " e=" + std::to_string(b.e) + " p0h=" + b.p0h.to_string() +
         " p0l=" + b.p0l.to_string();
}

Outcome convention_lock() {
  Outcome o;
  Laurent hopf = -mono(1, -3, -1) + mono(1, -1, -1) + mono(1, -1, 1);
  o.require(homfly(parallel_torus_link(2)) == hopf, "T(2,2)");
  LinkDiagram anti = reverse_component(mirror(parallel_torus_link(4)), 1);
  Laurent want = -mono(1, -5, -1) + mono(1, -3, -1) + mono(1, -3, 1) + mono(1, -1, 1);
  o.require(homfly(anti) == want, "anti-parallel T(2,4)");
  return o;
}

Outcome positive_extremes() {
  Outcome o;
  HomflyEngine eng;
  int n = 0;
  for (const auto& e : builtin_catalog()) {
    if (e.c > 10) continue;
    Laurent h = eng.compute(e.pd);
    auto b = bounds(h);
    int c = e.pd.num_crossings(), s = decompose(e.pd).size();
    o.require(b.E == s - c - 1 && b.p0h == ZMonomial{1, c - s + 1}, e.name);
    auto lib = positive_diagram_check(e.pd, h);
    o.require(lib.pass, e.name + ": " + lib.detail);
    ++n;
  }
  o.note = o.ok ? std::to_string(n) + " diagrams" : o.note;
  return o;
}

Outcome mid_lowest() {
  Outcome o;
  HomflyEngine eng;
  int n = 0;
  for (const auto& e : builtin_catalog()) {
    if (e.c > 6) continue;
    int c = e.pd.num_crossings(), s = decompose(e.pd).size();
    LinkDiagram mid = mid_diagram(e.pd);
    o.require(mid.num_crossings() == 2 * c, e.name + " crossing count");
    auto b = bounds(eng.compute(mid));
    int m = s - c - 1;
    o.require(b.e == s - 3 * c - 1 && b.p0l == ZMonomial{m % 2 == 0 ? 1 : -1, m}, e.name + ": " + show(b));
    ++n;
  }
  o.note = o.ok ? std::to_string(n) + " diagrams" : o.note;
  return o;
}

Outcome double_extremes() {
  Outcome o;
  HomflyEngine eng;
  auto b3 = bounds(eng.compute(double_diagram(trefoil(), 0).diagram));
  o.require(b3.E == 3 && b3.p0h == ZMonomial{1, 3} && b3.e == -5 && b3.p0l == ZMonomial{-1, 1}, "trefoil: " + show(b3));
  auto b5 = bounds(eng.compute(double_diagram(gen_torus(5).pd, 0).diagram));
  o.require(b5.E == 3 && b5.e == -9, "5_1: " + show(b5));
  return o;
}

Outcome twisted_table() {
  Outcome o;
  HomflyEngine eng;
  const auto& d = trefoil();
  for (int k = -6; k <= 6; ++k) {
    auto got = bounds(eng.compute(double_diagram(d, k).diagram));
    auto want = predict_bounds(d, k);
    o.require(show(got) == show(want), "k=" + std::to_string(k) + ": " + show(got) + " vs " + show(want));
    o.require(got.xi == braid_index_bound(d, k), "xi at k=" + std::to_string(k));
    o.require(got.xi == d.num_crossings() + 2 + rho_k(d, k), "c+2+rho at k=" + std::to_string(k));
    if (k == -3) o.require(got.p0l == ZMonomial{-2, 1}, "-2z branch at k=-3: " + got.p0l.to_string());
  }
  return o;
}

Outcome linking_identity() {
  Outcome o;
  int n = 0;
  for (const auto& e : builtin_catalog())
    for (int k = -10; k <= 10; ++k) {
      int lk = linking_number(double_diagram(e.pd, k).diagram);
      o.require(lk == k - writhe(e.pd), e.name + " k=" + std::to_string(k));
      ++n;
    }
  o.require(linking_number(double_diagram(gen_torus(5).pd, 2).diagram) == -3, "5_1 with two full twists");
  o.note = o.ok ? std::to_string(n) + " cases" : o.note;
  return o;
}

Outcome structural_counts_all() {
  Outcome o;
  for (const auto& e : builtin_catalog()) {
    if (e.c > 12) continue;
    int c = e.pd.num_crossings(), s = decompose(e.pd).size();
    auto dd = double_diagram(e.pd, 0);
    o.require(dd.dec.size() == 2 * c + 2, e.name + " circles");
    o.require(dd.diagram.num_crossings() == 4 * c, e.name + " edges");
    o.require(writhe(dd.diagram) == 0, e.name + " writhe");
    o.require(dd.count(CircleClass::Medium) == c, e.name + " medium");
    o.require(dd.count(CircleClass::Small) == c - s + 2, e.name + " small");
  }
  return o;
}

bool deletion_oracle(const SeifertGraph& g) {
  for (const auto& face : g.faces) {
    std::vector<int> comp(static_cast<size_t>(g.num_vertices));
    for (int v = 0; v < g.num_vertices; ++v) comp[static_cast<size_t>(v)] = v;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : g.edges) {
        if (std::find(face.begin(), face.end(), e.crossing) != face.end()) continue;
        int m = std::min(comp[static_cast<size_t>(e.u)], comp[static_cast<size_t>(e.v)]);
        for (int x : {e.u, e.v})
          if (comp[static_cast<size_t>(x)] != m) {
            comp[static_cast<size_t>(x)] = m;
            changed = true;
          }
      }
    }
    for (int c : comp)
      if (c != 0) return false;
  }
  return true;
}

Outcome properness() {
  Outcome o;
  auto entries = builtin_catalog();
  for (auto& e : counter_fixtures()) entries.push_back(e);
  int improper = 0;
  for (const auto& e : entries) {
    auto g = seifert_graph(e.pd);
    bool faces = is_proper(g).proper;
    bool trees = true;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) trees = trees && good_spanning_tree(g, f).has_value();
    bool no_cut = maximal_2cut_sets(g).empty();
    bool oracle = deletion_oracle(g);
    o.require(faces == oracle && trees == oracle && no_cut == oracle, e.name);
    improper += !oracle;
  }
  o.note = o.ok ? std::to_string(entries.size()) + " graphs, " + std::to_string(improper) + " improper" : o.note;
  return o;
}

Outcome skein_consistency() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::vector<LinkDiagram> pool;
  for (const auto& e : builtin_catalog())
    if (e.c <= 10) pool.push_back(e.pd);
  pool.push_back(parallel_torus_link(4));
  HomflyEngine eng;
  const Laurent a = mono(1, 1, 0), ainv = mono(1, -1, 0), z = mono(1, 0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    LinkDiagram d = pool[rng() % pool.size()];
    // Random crossing changes leave the alternating family.
    for (int x = 0; x < d.num_crossings(); ++x)
      if (rng() % 3 == 0) d = switch_crossing(d, x);
    int x = static_cast<int>(rng() % static_cast<unsigned>(d.num_crossings()));
    LinkDiagram plus = d.crossing(x).sign > 0 ? d : switch_crossing(d, x);
    LinkDiagram minus = switch_crossing(plus, x);
    LinkDiagram zero = smooth_crossing(plus, x);
    Laurent hp = eng.compute(plus), hm = eng.compute(minus), h0 = eng.compute(zero);
    o.require((a * hp - ainv * hm - z * h0).is_zero(), "skein at trial " + std::to_string(trial));
    o.require(eng.compute(simplify(d)) == eng.compute(d), "simplify at trial " + std::to_string(trial));
    o.require(eng.compute(mirror(d)) == mirror_substitute(eng.compute(d)), "mirror at trial " + std::to_string(trial));
  }
  o.note = o.ok ? "200 pairs" : o.note;
  return o;
}

Outcome mp_certification() {
  Outcome o;
  const auto& d = trefoil();
  auto dd = double_diagram(d, 0);
  const int beta = 2;
  int faces = static_cast<int>(seifert_graph(d).faces.size());
  auto check_seq = [&](const CertifiedSequence& seq, int want, const std::string& what) {
    std::string why;
    o.require(static_cast<int>(seq.steps.size()) == want, what + " length");
    o.require(replay(seq, &why), what + " replay: " + why);
    for (const auto& st : seq.steps) o.require(st.circles_after == st.circles_before - 1, what + " circle drop");
  };
  for (int f = 0; f < faces; ++f) check_seq(certified_negative_sequence(dd, f), beta, "face " + std::to_string(f));
  for (int x : dd.C_set) check_seq(certified_negative_sequence(dd, -1, x), beta + 1, "smoothed " + std::to_string(x));
  std::vector<int> all(dd.junctions.size(), 3);
  auto pos = certified_positive_sequence(dd, all, 0);
  std::string why;
  o.require(replay(pos, &why), "positive replay: " + why);
  int r_plus = static_cast<int>(pos.steps.size());
  Laurent h = homfly(dd.diagram);
  auto out = reduction_bound_check(dd.diagram, h, r_plus, beta);
  o.require(out.pass, "reduction bound: " + out.detail);
  int s = dd.dec.size(), w = writhe(dd.diagram);
  auto b = bounds(h);
  o.require(b.E == 3 && b.E == s - w - 1 - 2 * beta && b.e == -s - w + 1 + 2 * r_plus, "not tight: " + show(b));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "convention lock", 1, convention_lock},
      {2, "positive diagram extreme degree", 60, positive_extremes},
      {3, "mid diagram lowest degree", 300, mid_lowest},
      {4, "untwisted double extremes", 300, double_extremes},
      {5, "twisted double case table and braid bound", 1800, twisted_table},
      {6, "linking number identity", 600, linking_identity},
      {7, "double structural counts", 30, structural_counts_all},
      {8, "properness equivalence", 60, properness},
      {9, "skein self-consistency", 300, skein_consistency},
      {10, "MP certification", 60, mp_certification},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      out.ok = false;
      out.note += " (over time limit)";
    }
    all = all && out.ok;
    std::ostringstream line;
    line << "criterion " << c.id << " [" << c.name << "]: " << (out.ok ? "PASS" : "FAIL");
    if (!out.note.empty()) line << " - " << out.note;
    line << std::fixed;
    line.precision(3);
    line << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
