#include "kribbon/mp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "kribbon/builder.hpp"

namespace kribbon {

namespace {

using B = DiagramBuilder;

B::Port out_port(int node, int slot) { return slot == 2 ? B::uo(node) : B::oo(node); }

B::Port in_port(int node, int slot) { return slot == 0 ? B::ui(node) : B::oi(node); }

struct PathCrossing {
  int arc;
  bool near_head;
  int sign;
};

// In-slot where the circle leaving y at out-slot t arrives.
int in_partner(int t, int sy) {
  for (int in : {0, slot_of(Role::OverIn, sy)})
    if (smoothing_partner(in, sy) == t) return in;
  return -1;
}

// True when the other circle at y lies left of the circle passing s -> t.
bool other_on_left(int s, int t) { return t == (s + 1) % 4; }

// Crossings met by the rerouted overpass, in path order.  The path runs beside
// the hugged circle on the side of the other circle at x and crosses the
// strands of every crossing on that side.
std::vector<PathCrossing> hug_path(const LinkDiagram& d, int x, int hug) {
  const int sx = d.crossing(x).sign;
  const int in_x = hug == 0 ? 0 : slot_of(Role::OverIn, sx);
  const bool left = other_on_left(in_x, smoothing_partner(in_x, sx));
  int a = d.arc_at(x, in_x);
  std::vector<PathCrossing> path;
  for (int guard = 0;; ++guard) {
    if (guard > d.num_arcs()) throw MPError("reroute: hugged circle does not close");
    ArcEnd t = d.tail(a);
    if (t.crossing == x) break;
    const int sy = d.crossing(t.crossing).sign;
    int s = in_partner(t.slot, sy);
    if (other_on_left(s, t.slot) == left) {
      int X = (s + 2) % 4, Y = (t.slot + 2) % 4;
      bool ccw = X == (t.slot + 1) % 4;
      for (int slot : {X, Y}) {
        bool in = is_in_slot(slot, sy);
        path.push_back({d.arc_at(t.crossing, slot), in, ccw == in ? 1 : -1});
      }
    }
    a = d.arc_at(t.crossing, s);
  }
  return path;
}

// Crossings other than x on the hugged circle with their other circle on the
// same side as at x.
int same_side_crossings(const LinkDiagram& d, const SeifertDecomposition& dec, int x, int hug) {
  const int sx = d.crossing(x).sign;
  const int in_x = hug == 0 ? 0 : slot_of(Role::OverIn, sx);
  const bool left = other_on_left(in_x, smoothing_partner(in_x, sx));
  const int c2 = dec.circle_of_arc[static_cast<size_t>(d.arc_at(x, in_x))];
  int n = 0;
  for (int y = 0; y < d.num_crossings(); ++y) {
    if (y == x) continue;
    const int sy = d.crossing(y).sign;
    for (int in : {0, slot_of(Role::OverIn, sy)}) {
      if (dec.circle_of_arc[static_cast<size_t>(d.arc_at(y, in))] != c2) continue;
      int t = smoothing_partner(in, sy);
      if (dec.circle_of_arc[static_cast<size_t>(d.arc_at(y, t))] == c2 && other_on_left(in, t) == left) ++n;
    }
  }
  return n;
}

}  // namespace

bool mp_legal(const LinkDiagram& d, const SeifertDecomposition& dec, const MPMove& m, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (m.crossing < 0 || m.crossing >= d.num_crossings()) return fail("no such crossing");
  if (m.hug != 0 && m.hug != 1) return fail("hug must be 0 or 1");
  auto [u, v] = dec.crossing_circles[static_cast<size_t>(m.crossing)];
  if (u == v) return fail("crossing joins a circle to itself");
  int mult = 0;
  for (const auto& cc : dec.crossing_circles)
    if ((cc[0] == u && cc[1] == v) || (cc[0] == v && cc[1] == u)) ++mult;
  if (mult != 1) return fail("crossing is not lone");
  return true;
}

std::optional<MPResult> try_mp(const LinkDiagram& d, const MPMove& m) {
  auto dec = decompose(d);
  if (!mp_legal(d, dec, m)) return std::nullopt;
  MPResult r = reroute_unchecked(d, m);
  if (decompose(r.diagram).size() != dec.size() - 1) return std::nullopt;
  return r;
}

MPResult mp_reroute(const LinkDiagram& d, const MPMove& m) {
  int before = decompose(d).size();
  MPResult r = reroute_unchecked(d, m);
  int after = decompose(r.diagram).size();
  if (after != before - 1)
    throw MPError("reroute did not merge two circles: " + std::to_string(before) + " -> " + std::to_string(after));
  return r;
}

MPResult reroute_unchecked(const LinkDiagram& d, const MPMove& m) {
  std::string why;
  auto dec = decompose(d);
  if (!mp_legal(d, dec, m, &why)) throw MPError("illegal move at crossing " + std::to_string(m.crossing) + ": " + why);
  const int x = m.crossing;
  auto path = hug_path(d, x, m.hug);

  B b;
  std::vector<int> node(static_cast<size_t>(d.num_crossings()), -1);
  for (int y = 0; y < d.num_crossings(); ++y)
    if (y != x) node[static_cast<size_t>(y)] = b.add_crossing(d.crossing(y).sign);
  std::vector<int> pnode;
  for (const auto& p : path) pnode.push_back(b.add_crossing(p.sign));
  int ju = b.add_joint();
  int jo = path.empty() ? b.add_joint() : -1;
  B::Port over_start = path.empty() ? B::in(jo) : B::oi(pnode.front());
  B::Port over_end = path.empty() ? B::out(jo) : B::oo(pnode.back());
  for (size_t i = 0; i + 1 < pnode.size(); ++i) b.connect(B::oo(pnode[i]), B::oi(pnode[i + 1]));

  std::vector<int> near_tail(static_cast<size_t>(d.num_arcs()), -1), near_head(static_cast<size_t>(d.num_arcs()), -1);
  for (size_t i = 0; i < path.size(); ++i) {
    auto& slotref = path[i].near_head ? near_head : near_tail;
    if (slotref[static_cast<size_t>(path[i].arc)] >= 0) throw MPError("reroute: arc crossed twice at one end");
    slotref[static_cast<size_t>(path[i].arc)] = pnode[i];
  }

  for (int a = 0; a < d.num_arcs(); ++a) {
    ArcEnd t = d.tail(a), h = d.head(a);
    B::Port from, to;
    if (t.crossing == x) from = t.slot == 2 ? B::out(ju) : over_end;
    else from = out_port(node[static_cast<size_t>(t.crossing)], t.slot);
    if (h.crossing == x) to = h.slot == 0 ? B::in(ju) : over_start;
    else to = in_port(node[static_cast<size_t>(h.crossing)], h.slot);
    for (int p : {near_tail[static_cast<size_t>(a)], near_head[static_cast<size_t>(a)]}) {
      if (p < 0) continue;
      b.connect(from, B::ui(p));
      from = B::uo(p);
    }
    b.connect(from, to);
  }
  for (int i = 0; i < d.free_loops(); ++i) b.add_free_loop();

  std::vector<int> origin;
  MPResult r;
  r.diagram = b.build(&origin);
  std::vector<int> back(static_cast<size_t>(d.num_crossings() + static_cast<int>(path.size()) + 2), -1);
  for (int y = 0; y < d.num_crossings(); ++y)
    if (node[static_cast<size_t>(y)] >= 0) back[static_cast<size_t>(node[static_cast<size_t>(y)])] = y;
  for (int o : origin) r.origin.push_back(back[static_cast<size_t>(o)]);

  return r;
}

MPPrediction predict_mp(const LinkDiagram& d, const MPMove& m) {
  auto dec = decompose(d);
  MPPrediction p;
  p.circles = dec.size() - 1;
  p.crossings = d.num_crossings() - 1 + 2 * same_side_crossings(d, dec, m.crossing, m.hug);
  p.writhe = writhe(d) - d.crossing(m.crossing).sign;
  return p;
}

RSearch r_search(const LinkDiagram& d, int sign, std::int64_t budget) {
  RSearch out;
  std::unordered_map<std::string, int> memo;
  bool stop = false;
  std::function<int(const LinkDiagram&)> dfs = [&](const LinkDiagram& cur) -> int {
    auto cf = canonical_form(cur);
    if (auto it = memo.find(cf.key); it != memo.end()) return it->second;
    if (++out.states > budget) {
      stop = true;
      return 0;
    }
    const LinkDiagram& cd = cf.diagram;
    auto dec = decompose(cd);
    int ceiling = dec.size() - 1;
    int best = 0;
    for (int x = 0; x < cd.num_crossings() && best < ceiling && !stop; ++x) {
      if (cd.crossing(x).sign != sign) continue;
      for (int hug = 0; hug < 2 && best < ceiling && !stop; ++hug) {
        auto r = try_mp(cd, {x, hug});
        if (r) best = std::max(best, 1 + dfs(r->diagram));
      }
    }
    if (!stop) memo.emplace(cf.key, best);
    return best;
  };
  out.value = dfs(d);
  out.exact = !stop;
  return out;
}

namespace {

// Runs `targets` (crossings of `start`) in order, picking the hug of each move
// by depth-first search.  `prefer[i]` is the circle tried first for move i.
bool run_moves(const LinkDiagram& start, const std::vector<int>& targets, const std::vector<int>& prefer,
               CertifiedSequence& seq) {
  std::vector<CertifiedStep> steps;
  std::vector<char> done(targets.size(), 0);
  std::set<std::string> dead;
  std::function<bool(const LinkDiagram&, const std::vector<int>&)> go = [&](const LinkDiagram& cur,
                                                                           const std::vector<int>& id_of) -> bool {
    if (steps.size() == targets.size()) {
      seq.end = cur;
      seq.steps = steps;
      return true;
    }
    std::string state = canonical_form(cur).key + '|';
    for (char c : done) state.push_back(c ? '1' : '0');
    if (dead.count(state)) return false;
    auto dec = decompose(cur);
    for (size_t i = 0; i < targets.size(); ++i) {
      if (done[i]) continue;
      int x = id_of[static_cast<size_t>(targets[i])];
      if (x < 0) continue;
      for (int h = 0; h < 2; ++h) {
        int hug = h == 0 ? prefer[i] : 1 - prefer[i];
        MPMove mv{x, hug};
        auto tried = try_mp(cur, mv);
        if (!tried) continue;
        const MPResult& r = *tried;
        std::vector<int> back(static_cast<size_t>(cur.num_crossings()), -1);
        for (size_t n = 0; n < r.origin.size(); ++n)
          if (r.origin[n] >= 0) back[static_cast<size_t>(r.origin[n])] = static_cast<int>(n);
        std::vector<int> next(id_of.size(), -1);
        for (size_t o = 0; o < id_of.size(); ++o)
          if (id_of[o] >= 0) next[o] = back[static_cast<size_t>(id_of[o])];
        steps.push_back({mv, targets[i], cur.crossing(x).sign, dec.size(), dec.size() - 1});
        done[i] = 1;
        if (go(r.diagram, next)) return true;
        done[i] = 0;
        steps.pop_back();
      }
    }
    dead.insert(state);
    return false;
  };
  std::vector<int> ident(static_cast<size_t>(start.num_crossings()));
  for (size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
  seq.start = start;
  return go(start, ident);
}

int other(const std::array<int, 2>& cc, int c) { return cc[0] == c ? cc[1] : cc[0]; }

}  // namespace

CertifiedSequence certified_negative_sequence(const DoubleDiagram& dd, int f0, std::optional<int> smoothed) {
  if (dd.k != 0) throw MPError("certified sequences need the untwisted double");
  const auto g = seifert_graph(dd.base);
  const int nf = static_cast<int>(g.faces.size());
  const auto& cc = dd.dec.crossing_circles;

  // Face of G_S(D) whose small circle the crossing reaches from its medium circle.
  auto face_of_small = [&](int small) {
    for (int f = 0; f < nf; ++f)
      if (dd.small_of_face[static_cast<size_t>(f)] == small) return f;
    return -1;
  };
  auto small_end = [&](int junction, int crossing) {
    return other(cc[static_cast<size_t>(crossing)], dd.medium_of_junction[static_cast<size_t>(junction)]);
  };

  int lead = -1;  // junction of the smoothed crossing
  if (smoothed) {
    for (size_t j = 0; j < dd.junctions.size(); ++j)
      if (dd.junctions[j][1] == *smoothed) lead = static_cast<int>(j);
    if (lead < 0) throw MPError("smoothed crossing is not in C");
    int f = face_of_small(small_end(lead, dd.junctions[static_cast<size_t>(lead)][2]));
    if (f0 >= 0 && f0 != f) throw MPError("smoothed crossing's partner does not lie on the start face");
    f0 = f;
  }
  if (f0 < 0 || f0 >= nf) throw MPError("start face out of range");

  // Face elimination: from an eliminated face F, delete a proper edge of its
  // boundary (its C-crossing reaches the small circle of F) and eliminate the
  // face on the other side.
  std::vector<std::vector<int>> faces_of_edge(static_cast<size_t>(g.num_edges()));
  for (int f = 0; f < nf; ++f)
    for (int e : g.faces[static_cast<size_t>(f)]) faces_of_edge[static_cast<size_t>(e)].push_back(f);
  auto proper = [&](int edge, int face) {
    return small_end(edge, dd.junctions[static_cast<size_t>(edge)][1]) == dd.small_of_face[static_cast<size_t>(face)];
  };

  LinkDiagram start = dd.diagram;
  std::vector<int> id(static_cast<size_t>(dd.diagram.num_crossings()));
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  if (smoothed) {
    std::vector<Removal> how(id.size(), Removal::Keep);
    how[static_cast<size_t>(*smoothed)] = Removal::Smooth;
    std::vector<int> kept;
    start = remove_crossings(dd.diagram, how, &kept);
    std::fill(id.begin(), id.end(), -1);
    for (size_t n = 0; n < kept.size(); ++n) id[static_cast<size_t>(kept[n])] = static_cast<int>(n);
  }

  // Every elimination tree rooted at f0 gives a candidate set of paired
  // crossings; the first that replays in some order wins.
  CertifiedSequence seq;
  std::vector<char> gone(static_cast<size_t>(nf), 0), deleted(static_cast<size_t>(g.num_edges()), 0);
  std::vector<int> order{f0}, walk;
  std::set<std::vector<int>> tried;
  int budget = 5000;
  gone[static_cast<size_t>(f0)] = 1;
  auto attempt = [&]() {
    std::vector<int> key = walk;
    std::sort(key.begin(), key.end());
    if (!tried.insert(key).second) return false;
    std::vector<int> targets, prefer;
    auto add = [&](int junction) {
      int xc = dd.junctions[static_cast<size_t>(junction)][2];
      targets.push_back(id[static_cast<size_t>(xc)]);
      int med = dd.medium_of_junction[static_cast<size_t>(junction)];
      prefer.push_back(cc[static_cast<size_t>(xc)][0] == med ? 0 : 1);
    };
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) add(*it);
    if (smoothed) add(lead);
    seq.faces = order;
    return run_moves(start, targets, prefer, seq);
  };
  std::function<bool()> eliminate = [&]() -> bool {
    if (static_cast<int>(order.size()) == nf) return attempt();
    if (--budget < 0) return false;
    for (size_t oi = order.size(); oi-- > 0;) {
      int f = order[oi];
      for (int e : g.faces[static_cast<size_t>(f)]) {
        if (deleted[static_cast<size_t>(e)] || !proper(e, f)) continue;
        int nxt = -1;
        for (int h : faces_of_edge[static_cast<size_t>(e)])
          if (h != f) nxt = h;
        if (nxt < 0 || gone[static_cast<size_t>(nxt)]) continue;
        deleted[static_cast<size_t>(e)] = 1;
        gone[static_cast<size_t>(nxt)] = 1;
        order.push_back(nxt);
        walk.push_back(e);
        bool ok = eliminate();
        if (ok) return true;
        walk.pop_back();
        order.pop_back();
        gone[static_cast<size_t>(nxt)] = 0;
        deleted[static_cast<size_t>(e)] = 0;
      }
    }
    return false;
  };
  if (!eliminate()) throw MPError("no face elimination from this face yields replayable reductions");
  // Sources refer to crossings of the double itself.
  std::vector<int> back(id.size(), -1);
  for (size_t o = 0; o < id.size(); ++o)
    if (id[o] >= 0) back[static_cast<size_t>(id[o])] = static_cast<int>(o);
  for (auto& st : seq.steps) st.source = back[static_cast<size_t>(st.source)];
  return seq;
}

namespace {

// Spanning trees of g that use no edge of the face boundary, as edge lists.
std::vector<std::vector<int>> trees_off_face(const SeifertGraph& g, int face) {
  std::vector<char> on_face(static_cast<size_t>(g.num_edges()), 0);
  for (int e : g.faces[static_cast<size_t>(face)]) on_face[static_cast<size_t>(e)] = 1;
  std::vector<int> pool;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!on_face[static_cast<size_t>(e)]) pool.push_back(e);
  const int need = g.num_vertices - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(pick.size()) == need) {
      std::vector<int> parent(static_cast<size_t>(g.num_vertices));
      for (int v = 0; v < g.num_vertices; ++v) parent[static_cast<size_t>(v)] = v;
      std::function<int(int)> find = [&](int v) {
        return parent[static_cast<size_t>(v)] == v ? v : parent[static_cast<size_t>(v)] = find(parent[static_cast<size_t>(v)]);
      };
      for (int e : pick) {
        int a = find(g.edges[static_cast<size_t>(e)].u), b = find(g.edges[static_cast<size_t>(e)].v);
        if (a == b) return;
        parent[static_cast<size_t>(a)] = b;
      }
      out.push_back(pick);
      return;
    }
    for (size_t i = from; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

CertifiedSequence certified_positive_sequence(const DoubleDiagram& dd, const std::vector<int>& keep_mask, int face) {
  const auto g = seifert_graph(dd.base);
  auto trees = trees_off_face(g, face);
  if (trees.empty()) throw MPError("no spanning tree avoids the face boundary");
  std::vector<int> kept;
  LinkDiagram hat = hat_diagram(dd, keep_mask, &kept);
  std::vector<int> id(static_cast<size_t>(dd.diagram.num_crossings()), -1);
  for (size_t n = 0; n < kept.size(); ++n) id[static_cast<size_t>(kept[n])] = static_cast<int>(n);

  // Each tree edge contributes one move at c00 or c11 of its junction; search
  // over edge order, crossing and hug.
  CertifiedSequence seq;
  seq.start = hat;
  for (const auto& edges : trees) {
    std::vector<CertifiedStep> steps;
    std::vector<char> done(edges.size(), 0);
    std::set<std::string> dead;
    std::function<bool(const LinkDiagram&, std::vector<int>&)> go = [&](const LinkDiagram& cur,
                                                                        std::vector<int>& cur_id) -> bool {
      if (steps.size() == edges.size()) {
        seq.end = cur;
        seq.steps = steps;
        return true;
      }
      std::string state = canonical_form(cur).key + '|';
      for (char c : done) state.push_back(c ? '1' : '0');
      if (dead.count(state)) return false;
      auto dec = decompose(cur);
      for (size_t i = 0; i < edges.size(); ++i) {
        if (done[i]) continue;
        const auto& jn = dd.junctions[static_cast<size_t>(edges[i])];
        for (int src : {jn[0], jn[3]}) {
          int x = cur_id[static_cast<size_t>(src)];
          if (x < 0) continue;
          for (int hug = 0; hug < 2; ++hug) {
            MPMove mv{x, hug};
            auto tried = try_mp(cur, mv);
            if (!tried) continue;
            const MPResult& r = *tried;
            std::vector<int> next(cur_id.size(), -1);
            std::vector<int> inv(static_cast<size_t>(cur.num_crossings()), -1);
            for (size_t o = 0; o < cur_id.size(); ++o)
              if (cur_id[o] >= 0) inv[static_cast<size_t>(cur_id[o])] = static_cast<int>(o);
            for (size_t n = 0; n < r.origin.size(); ++n)
              if (r.origin[n] >= 0 && inv[static_cast<size_t>(r.origin[n])] >= 0)
                next[static_cast<size_t>(inv[static_cast<size_t>(r.origin[n])])] = static_cast<int>(n);
            steps.push_back({mv, src, cur.crossing(x).sign, dec.size(), dec.size() - 1});
            done[i] = 1;
            if (go(r.diagram, next)) return true;
            done[i] = 0;
            steps.pop_back();
          }
        }
      }
      dead.insert(state);
      return false;
    };
    std::vector<int> start_id = id;
    if (go(hat, start_id)) return seq;
  }
  throw MPError("no spanning tree off the face boundary yields a positive sequence");
}

bool replay(const CertifiedSequence& seq, std::string* why) {
  LinkDiagram cur = seq.start;
  for (size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& st = seq.steps[i];
    auto dec = decompose(cur);
    std::string w;
    if (!mp_legal(cur, dec, st.move, &w)) {
      if (why) *why = "step " + std::to_string(i) + ": " + w;
      return false;
    }
    if (dec.size() != st.circles_before || cur.crossing(st.move.crossing).sign != st.sign) {
      if (why) *why = "step " + std::to_string(i) + ": state differs from the record";
      return false;
    }
    cur = mp_reroute(cur, st.move).diagram;
  }
  if (!(cur == seq.end)) {
    if (why) *why = "final diagram differs";
    return false;
  }
  return true;
}

}  // namespace kribbon
