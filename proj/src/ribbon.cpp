#include "kribbon/ribbon.hpp"

#include <algorithm>
#include <cstdlib>

#include "kribbon/builder.hpp"

namespace kribbon {

namespace {

using B = DiagramBuilder;

int diagram_sign(const LinkDiagram& d) { return d.num_crossings() > 0 ? d.crossing(0).sign : 1; }

ZMonomial signed_power(int base_sign, int exponent, long extra = 1) {
  // extra * (base_sign * z)^exponent
  Integer c = extra;
  if (base_sign < 0 && (exponent % 2 != 0)) c = -c;
  return {c, exponent};
}

BoundsReport mirrored(const BoundsReport& b) {
  BoundsReport m;
  m.E = -b.e;
  m.e = -b.E;
  m.p0h = {(b.e % 2 == 0) ? b.p0l.c : Integer(-b.p0l.c), b.p0l.z};
  m.p0l = {(b.E % 2 == 0) ? b.p0h.c : Integer(-b.p0h.c), b.p0h.z};
  m.xi = b.xi;
  return m;
}

// The four grid crossings of one junction plus the order in which each of the
// four lines meets them.
struct Grid {
  std::array<int, 4> node{};  // c00, c01, c10, c11
  int v0[2], v1[2], h0[2], h1[2];
};

Grid make_grid(DiagramBuilder& b, int eps) {
  Grid g;
  // sign(cij) = hx(Hj) * vy(Vi): H0 heads east at a positive crossing.
  g.node[0] = b.add_crossing(eps);
  g.node[1] = b.add_crossing(-eps);
  g.node[2] = b.add_crossing(-eps);
  g.node[3] = b.add_crossing(eps);
  const int c00 = g.node[0], c01 = g.node[1], c10 = g.node[2], c11 = g.node[3];
  if (eps > 0) {
    g.v0[0] = c01, g.v0[1] = c00;
    g.v1[0] = c10, g.v1[1] = c11;
    g.h0[0] = c00, g.h0[1] = c10;
    g.h1[0] = c11, g.h1[1] = c01;
  } else {
    g.v0[0] = c00, g.v0[1] = c01;
    g.v1[0] = c11, g.v1[1] = c10;
    g.h0[0] = c10, g.h0[1] = c00;
    g.h1[0] = c01, g.h1[1] = c11;
  }
  b.connect(B::uo(g.v0[0]), B::ui(g.v0[1]));
  b.connect(B::uo(g.v1[0]), B::ui(g.v1[1]));
  b.connect(B::oo(g.h0[0]), B::oi(g.h0[1]));
  b.connect(B::oo(g.h1[0]), B::oi(g.h1[1]));
  return g;
}

}  // namespace

const char* to_string(CircleClass c) {
  switch (c) {
    case CircleClass::Large: return "large";
    case CircleClass::Medium: return "medium";
    case CircleClass::Small: return "small";
    case CircleClass::Twist: return "twist";
  }
  return "?";
}

int DoubleDiagram::count(CircleClass c) const {
  return static_cast<int>(std::count(circle_class.begin(), circle_class.end(), c));
}

DoubleDiagram double_diagram(const LinkDiagram& d, int k, int twist_arc) {
  if (!is_special_alternating(d)) throw RibbonError("double: diagram is not special alternating");
  auto ddec = decompose(d);
  if (!nesting_free(d, ddec)) throw RibbonError("double: Seifert circles are nested");
  if (!flype_normalized(d, ddec)) throw RibbonError("double: diagram is not flype-normal");

  const int c = d.num_crossings();
  const int eps = diagram_sign(d);
  DoubleDiagram dd;
  dd.base = d;
  dd.k = k;

  DiagramBuilder b;
  std::vector<Grid> grids;
  for (int x = 0; x < c; ++x) grids.push_back(make_grid(b, eps));

  const int m = 2 * std::abs(k);
  std::vector<int> twist;
  for (int i = 0; i < m; ++i) twist.push_back(b.add_crossing(k > 0 ? 1 : -1));
  // Strand A (component 1) meets the twists in order; before twist i it is on
  // the right of B iff i is odd.  The right strand is over in a positive twist.
  auto a_over = [&](int i) { return (i % 2 == 1) == (k > 0); };

  auto primary_in = [&](int x, int slot) { return slot == 0 ? B::ui(grids[x].v0[0]) : B::oi(grids[x].h0[0]); };
  auto primary_out = [&](int x, int slot) { return slot == 2 ? B::uo(grids[x].v0[1]) : B::oo(grids[x].h0[1]); };
  auto copy_in = [&](int x, int slot) { return slot == 2 ? B::ui(grids[x].v1[0]) : B::oi(grids[x].h1[0]); };
  auto copy_out = [&](int x, int slot) { return slot == 0 ? B::uo(grids[x].v1[1]) : B::oo(grids[x].h1[1]); };

  if (c > 0) {
    if (twist_arc < 0) twist_arc = d.arc_at(canonical_form(d).crossing_from[0], 2);
    dd.twist_arc = twist_arc;
    for (int a = 0; a < d.num_arcs(); ++a) {
      ArcEnd t = d.tail(a), h = d.head(a);
      if (a != twist_arc || m == 0) {
        b.connect(primary_out(t.crossing, t.slot), primary_in(h.crossing, h.slot));
        b.connect(copy_out(h.crossing, h.slot), copy_in(t.crossing, t.slot));
        continue;
      }
      B::Port pa = primary_out(t.crossing, t.slot);
      for (int i = 0; i < m; ++i) {
        int n = twist[static_cast<size_t>(i)];
        b.connect(pa, a_over(i) ? B::oi(n) : B::ui(n));
        pa = a_over(i) ? B::oo(n) : B::uo(n);
      }
      b.connect(pa, primary_in(h.crossing, h.slot));
      B::Port pb = copy_out(h.crossing, h.slot);
      for (int i = m - 1; i >= 0; --i) {
        int n = twist[static_cast<size_t>(i)];
        b.connect(pb, a_over(i) ? B::ui(n) : B::oi(n));
        pb = a_over(i) ? B::uo(n) : B::oo(n);
      }
      b.connect(pb, copy_in(t.crossing, t.slot));
    }
    for (int i = 0; i < 2 * d.free_loops(); ++i) b.add_free_loop();
  } else if (m > 0) {
    // Twisted unknot: the two strands close up through the twist region.
    for (int i = 0; i + 1 < m; ++i) {
      int n = twist[static_cast<size_t>(i)], n2 = twist[static_cast<size_t>(i + 1)];
      b.connect(a_over(i) ? B::oo(n) : B::uo(n), a_over(i + 1) ? B::oi(n2) : B::ui(n2));
      b.connect(a_over(i + 1) ? B::uo(n2) : B::oo(n2), a_over(i) ? B::ui(n) : B::oi(n));
    }
    int first = twist.front(), last = twist.back();
    b.connect(a_over(m - 1) ? B::oo(last) : B::uo(last), a_over(0) ? B::oi(first) : B::ui(first));
    b.connect(a_over(0) ? B::uo(first) : B::oo(first), a_over(m - 1) ? B::ui(last) : B::oi(last));
    for (int i = 1; i < d.free_loops(); ++i) {
      b.add_free_loop();
      b.add_free_loop();
    }
  } else {
    for (int i = 0; i < 2 * d.free_loops(); ++i) b.add_free_loop();
  }

  dd.diagram = b.build();
  for (int x = 0; x < c; ++x) dd.junctions.push_back({4 * x, 4 * x + 1, 4 * x + 2, 4 * x + 3});
  for (int i = 0; i < m; ++i) dd.twist_crossings.push_back(4 * c + i);

  const LinkDiagram& D2 = dd.diagram;
  dd.dec = decompose(D2);
  const auto& dec = dd.dec;
  const int junction_crossings = 4 * c;
  for (int ci = 0; ci < dec.size(); ++ci) {
    bool pos = false, neg = false;
    for (int a : dec.circles[static_cast<size_t>(ci)]) {
      int x = D2.head(a).crossing;
      if (x >= junction_crossings) continue;
      (D2.crossing(x).sign == eps ? pos : neg) = true;
    }
    CircleClass cls;
    if (pos && neg) cls = CircleClass::Medium;
    else if (pos) cls = CircleClass::Large;
    else if (neg) cls = CircleClass::Small;
    else if (!dec.circles[static_cast<size_t>(ci)].empty()) cls = CircleClass::Twist;
    else cls = (ci - (dec.size() - 2 * d.free_loops())) % 2 == 0 ? CircleClass::Large : CircleClass::Small;
    dd.circle_class.push_back(cls);
  }

  auto other_circle = [&](int crossing, int circle) {
    auto [u, v] = dec.crossing_circles[static_cast<size_t>(crossing)];
    return u == circle ? v : u;
  };
  dd.large_of_circle.assign(static_cast<size_t>(ddec.size()), -1);
  for (int x = 0; x < c; ++x) {
    const auto& j = dd.junctions[static_cast<size_t>(x)];
    auto p = dec.crossing_circles[static_cast<size_t>(j[0])];
    auto q = dec.crossing_circles[static_cast<size_t>(j[3])];
    int med = (p[0] == q[0] || p[0] == q[1]) ? p[0] : p[1];
    dd.medium_of_junction.push_back(med);
    // c00 sits in the corner of D's over-in circle at a positive crossing and
    // of its under-in circle at a negative one; c11 in the other.
    auto src = ddec.crossing_circles[static_cast<size_t>(x)];
    int near00 = eps > 0 ? src[1] : src[0];
    int near11 = eps > 0 ? src[0] : src[1];
    auto& l0 = dd.large_of_circle[static_cast<size_t>(near00)];
    auto& l1 = dd.large_of_circle[static_cast<size_t>(near11)];
    if (l0 < 0) l0 = other_circle(j[0], med);
    if (l1 < 0) l1 = other_circle(j[3], med);
  }

  if (c > 0) {
    auto g = seifert_graph(d, ddec);
    auto regions = diagram_faces(d);
    for (size_t f = 0; f < g.faces.size(); ++f) {
      int small = -1;
      for (const auto& corner : regions[static_cast<size_t>(g.face_region[f])]) {
        if (is_circle_corner(d, corner)) continue;
        const auto& j = dd.junctions[static_cast<size_t>(corner.crossing)];
        int neg = corner.slot <= 1 ? j[2] : j[1];
        small = other_circle(neg, dd.medium_of_junction[static_cast<size_t>(corner.crossing)]);
        break;
      }
      dd.small_of_face.push_back(small);
    }
  }
  dd.C_set = crossing_set_C(dd);
  return dd;
}

std::vector<int> crossing_set_C(const DoubleDiagram& dd) {
  std::vector<int> out;
  const auto& D2 = dd.diagram;
  for (const auto& j : dd.junctions) {
    int x = j[1];
    bool under_primary = D2.component_at(x, 0) == 0;
    bool over_copy = D2.component_at(x, slot_of(Role::OverIn, D2.crossing(x).sign)) == 1;
    if (!under_primary || !over_copy) throw RibbonError("crossing set: junction strands misclassified");
    out.push_back(x);
  }
  return out;
}

LinkDiagram mid_diagram(const LinkDiagram& d) {
  if (d.num_crossings() == 0) return d;
  DoubleDiagram dd = double_diagram(d, 0);
  const int eps = diagram_sign(d);
  std::vector<Removal> how(static_cast<size_t>(dd.diagram.num_crossings()), Removal::Keep);
  for (int x = 0; x < dd.diagram.num_crossings(); ++x)
    if (dd.diagram.crossing(x).sign != eps) how[static_cast<size_t>(x)] = Removal::Smooth;
  LinkDiagram r = remove_crossings(dd.diagram, how);
  return LinkDiagram(r.crossings(), 0);
}

LinkDiagram hat_diagram(const DoubleDiagram& dd, const std::vector<int>& keep_mask, std::vector<int>* kept_from) {
  if (dd.k != 0) throw RibbonError("hat diagram needs an untwisted double");
  if (keep_mask.size() != dd.junctions.size()) throw RibbonError("hat diagram: one mask entry per junction");
  std::vector<Removal> how(static_cast<size_t>(dd.diagram.num_crossings()), Removal::Keep);
  for (size_t x = 0; x < dd.junctions.size(); ++x) {
    if (!(keep_mask[x] & 1)) how[static_cast<size_t>(dd.junctions[x][1])] = Removal::Smooth;
    if (!(keep_mask[x] & 2)) how[static_cast<size_t>(dd.junctions[x][2])] = Removal::Smooth;
  }
  return remove_crossings(dd.diagram, how, kept_from);
}

int linking_number(const LinkDiagram& d) {
  if (d.num_components() != 2) throw RibbonError("linking number needs exactly 2 components");
  int sum = 0;
  for (int x = 0; x < d.num_crossings(); ++x)
    if (d.component_at(x, 0) != d.component_at(x, 1)) sum += d.crossing(x).sign;
  return sum / 2;
}

int rho_k(const LinkDiagram& d, int k) {
  const int c = d.num_crossings();
  const int s = decompose(d).size();
  const int w = writhe(d);
  bool first_case = (w >= 0 && k <= 0) || (w < 0 && k >= 0);
  bool second_case = (w >= 0 && k >= 0) || (w < 0 && k <= 0);
  int r1 = std::max(0, std::abs(k) + s - c - 2);
  int r2 = std::max(0, std::abs(k) - s);
  if (first_case && second_case) return std::max(r1, r2);  // k == 0, both read 0 when c >= s - 1
  return first_case ? r1 : r2;
}

int braid_index_bound(const LinkDiagram& d, int k) {
  if (!is_special_alternating(d)) throw RibbonError("braid index bound: diagram is not special alternating");
  return d.num_crossings() + 2 + rho_k(d, k);
}

BoundsReport predict_bounds(const LinkDiagram& d, int k) {
  if (!is_special_alternating(d) || d.num_crossings() == 0)
    throw RibbonError("prediction needs a special alternating diagram with crossings");
  if (diagram_sign(d) < 0) return mirrored(predict_bounds(mirror(d), -k));
  const int c = d.num_crossings();
  const int s = decompose(d).size();
  BoundsReport r;
  const ZMonomial high{1, 2 * c - 2 * s + 1};
  const ZMonomial low{-1, 2 * s - 3};
  if (k >= 0) {
    r.e = 2 * s - 2 * c - 2 * k - 3;
    r.p0l = low;
    if (k <= s) {
      r.E = 2 * s - 2 * k - 1;
      r.p0h = high;
    } else {
      r.E = -1;
      r.p0h = {1, 1};
    }
  } else {
    r.E = 2 * s - 2 * k - 1;
    r.p0h = high;
    const int edge = s - c - 2;
    r.e = k >= edge ? 2 * s - 2 * k - 2 * c - 3 : 1;
    if (k >= edge + 1 || (k == edge && s > 2)) r.p0l = low;
    else if (k == edge) r.p0l = {-2, 1};
    else r.p0l = {-1, 1};
  }
  r.xi = (r.E - r.e) / 2 + 1;
  return r;
}

StructurePrediction predict_structure(const LinkDiagram& d) {
  if (!is_special_alternating(d) || d.num_crossings() == 0 || diagram_sign(d) < 0)
    throw RibbonError("structure prediction needs a positive special alternating diagram");
  const int c = d.num_crossings();
  const int s = decompose(d).size();
  StructurePrediction p;
  p.mid_e = s - 3 * c - 1;
  p.mid_p0l = signed_power(-1, s - c - 1);
  p.double_E = 2 * s - 1;
  p.double_p0h = {1, 2 * c - 2 * s + 1};
  p.double_e = 2 * s - 2 * c - 3;
  p.double_p0l = {-1, 2 * s - 3};
  return p;
}

HatPrediction predict_hat(int kept, int s1, int s2) {
  return {kept + 2 * s1 - 4 * s2 - 3, signed_power(-1, kept + 2 * s1 - 2 * s2 - 3)};
}

std::vector<CountCheck> structural_counts(const DoubleDiagram& dd) {
  const long long c = dd.base.num_crossings();
  const long long s = decompose(dd.base).size();
  auto g = seifert_graph(dd.diagram, dd.dec);
  std::vector<CountCheck> out;
  out.push_back({"edges", g.num_edges(), 4 * c + 2 * std::abs(dd.k)});
  out.push_back({"writhe", writhe(dd.diagram), 2 * dd.k});
  out.push_back({"C", static_cast<long long>(dd.C_set.size()), c});
  out.push_back({"linking", linking_number(dd.diagram), dd.k - writhe(dd.base)});
  if (dd.k != 0) return out;
  out.push_back({"circles", dd.dec.size(), 2 * c + 2});
  out.push_back({"large", dd.count(CircleClass::Large), s});
  out.push_back({"medium", dd.count(CircleClass::Medium), c});
  out.push_back({"small", dd.count(CircleClass::Small), c - s + 2});
  out.push_back({"lone", static_cast<long long>(lone_crossings(g).size()), 4 * c});
  return out;
}

bool flipped_C_splits(const DoubleDiagram& dd) {
  LinkDiagram f = dd.diagram;
  for (int x : dd.C_set) f = switch_crossing(f, x);
  // Component 1 must now pass over component 2 everywhere; the crossings
  // between them then come apart.
  std::vector<Removal> how(static_cast<size_t>(f.num_crossings()), Removal::Keep);
  for (int x = 0; x < f.num_crossings(); ++x) {
    int under = f.component_at(x, 0);
    int over = f.component_at(x, slot_of(Role::OverIn, f.crossing(x).sign));
    if (under == over) continue;
    if (over != 0) return false;
    how[static_cast<size_t>(x)] = Removal::PassThrough;
  }
  LinkDiagram split = simplify(remove_crossings(f, how));
  auto pieces = connected_pieces(split);
  if (dd.base.num_crossings() == 0) return split.num_crossings() == 0 && split.num_components() == 2;
  if (pieces.size() != 2 || split.free_loops() != 0) return false;
  std::string fwd = canonical_form(dd.base).key;
  std::string rev = canonical_form(reverse_component(dd.base, 1)).key;
  for (const auto& p : pieces) {
    std::string key = canonical_form(sub_diagram(split, p)).key;
    if (key != fwd && key != rev) return false;
  }
  return true;
}

}  // namespace kribbon
