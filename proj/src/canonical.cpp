#include <algorithm>

#include "kribbon/diagram.hpp"

namespace kribbon {

namespace {

struct Traversal {
  std::vector<int> code;
  std::vector<int> arc_order;       // arcs in visit order
  std::vector<int> crossing_order;  // crossings in first-visit order
};

// Walks every component of one connected piece, starting at `start`.
// Later components start at the first unvisited in-slot of the earliest
// visited crossing that touches them.
Traversal traverse(const LinkDiagram& d, int start, int piece_arcs) {
  const int n = d.num_crossings();
  Traversal t;
  t.code.reserve(static_cast<size_t>(piece_arcs) + 8);
  std::vector<int> xid(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(d.num_arcs()), 0);
  int arc = start;
  while (true) {
    int a = arc;
    do {
      seen[static_cast<size_t>(a)] = 1;
      t.arc_order.push_back(a);
      ArcEnd h = d.head(a);
      auto& id = xid[static_cast<size_t>(h.crossing)];
      if (id < 0) {
        id = static_cast<int>(t.crossing_order.size());
        t.crossing_order.push_back(h.crossing);
      }
      t.code.push_back(id * 4 + h.slot);
      a = d.arc_at(h.crossing, (h.slot + 2) % 4);
    } while (a != arc);
    t.code.push_back(-1);
    if (static_cast<int>(t.arc_order.size()) == piece_arcs) break;
    int next = -1;
    for (int x : t.crossing_order) {
      const auto& c = d.crossing(x);
      for (int s : {0, slot_of(Role::OverIn, c.sign)}) {
        int b = c.arcs[static_cast<size_t>(s)];
        if (!seen[static_cast<size_t>(b)]) {
          next = b;
          break;
        }
      }
      if (next >= 0) break;
    }
    arc = next;
  }
  for (int x : t.crossing_order) t.code.push_back(d.crossing(x).sign > 0 ? 1 : 0);
  return t;
}

}  // namespace

CanonicalForm canonical_form(const LinkDiagram& d) {
  auto pieces = connected_pieces(d);
  struct PieceResult {
    Traversal best;
  };
  std::vector<PieceResult> results;
  for (const auto& piece : pieces) {
    std::vector<int> arcs;
    for (int x : piece)
      for (int s : {2, slot_of(Role::OverOut, d.crossing(x).sign)}) arcs.push_back(d.arc_at(x, s));
    Traversal best;
    bool have = false;
    for (int a : arcs) {
      Traversal t = traverse(d, a, static_cast<int>(arcs.size()));
      if (!have || t.code < best.code) {
        best = std::move(t);
        have = true;
      }
    }
    results.push_back({std::move(best)});
  }
  std::sort(results.begin(), results.end(),
            [](const PieceResult& a, const PieceResult& b) { return a.best.code < b.best.code; });

  CanonicalForm out;
  std::vector<int> arc_label(static_cast<size_t>(d.num_arcs()), -1);
  std::vector<int> xs_from;
  int next_arc = 0;
  for (const auto& r : results) {
    for (int a : r.best.arc_order) arc_label[static_cast<size_t>(a)] = next_arc++;
    for (int x : r.best.crossing_order) xs_from.push_back(x);
  }
  std::vector<Crossing> xs;
  xs.reserve(xs_from.size());
  for (int x : xs_from) {
    Crossing c = d.crossing(x);
    for (auto& a : c.arcs) a = arc_label[static_cast<size_t>(a)];
    xs.push_back(c);
  }

  std::string key;
  key.reserve(64);
  auto put = [&key](int v) {
    unsigned u = static_cast<unsigned>(v + 2);
    key.push_back(static_cast<char>(u & 0xff));
    key.push_back(static_cast<char>((u >> 8) & 0xff));
  };
  for (const auto& r : results) {
    for (int v : r.best.code) put(v);
    put(-2);
  }
  put(d.free_loops());
  out.key = std::move(key);
  out.diagram = LinkDiagram(std::move(xs), d.free_loops());
  out.crossing_from = std::move(xs_from);
  return out;
}

}  // namespace kribbon
