#include "kribbon/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

namespace kribbon {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

SeifertDecomposition decompose(const LinkDiagram& d) {
  SeifertDecomposition dec;
  const int arcs = d.num_arcs();
  dec.circle_of_arc.assign(static_cast<size_t>(arcs), -1);
  for (int a = 0; a < arcs; ++a) {
    if (dec.circle_of_arc[static_cast<size_t>(a)] >= 0) continue;
    int id = dec.size();
    std::vector<int> circle;
    int b = a;
    do {
      dec.circle_of_arc[static_cast<size_t>(b)] = id;
      circle.push_back(b);
      ArcEnd h = d.head(b);
      b = d.arc_at(h.crossing, smoothing_partner(h.slot, d.crossing(h.crossing).sign));
    } while (b != a);
    dec.circles.push_back(std::move(circle));
  }
  for (int i = 0; i < d.free_loops(); ++i) dec.circles.emplace_back();
  dec.crossing_circles.resize(static_cast<size_t>(d.num_crossings()));
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& c = d.crossing(x);
    dec.crossing_circles[static_cast<size_t>(x)] = {
        dec.circle_of_arc[static_cast<size_t>(c.arcs[0])],
        dec.circle_of_arc[static_cast<size_t>(c.arcs[static_cast<size_t>(slot_of(Role::OverIn, c.sign))])]};
  }
  return dec;
}

bool is_circle_corner(const LinkDiagram& d, Corner c) {
  // Corner q sits between slots q and q+1; the smoothing pairs are {0,1},{2,3}
  // at a positive crossing and {3,0},{1,2} at a negative one.
  bool even = c.slot % 2 == 0;
  return d.crossing(c.crossing).sign > 0 ? even : !even;
}

int SeifertGraph::multiplicity(int u, int v) const {
  int m = 0;
  for (const auto& e : edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++m;
  return m;
}

SeifertGraph seifert_graph(const LinkDiagram& d, const SeifertDecomposition& dec) {
  SeifertGraph g;
  g.num_vertices = dec.size();
  for (int x = 0; x < d.num_crossings(); ++x) {
    auto [u, v] = dec.crossing_circles[static_cast<size_t>(x)];
    g.edges.push_back({x, u, v, d.crossing(x).sign});
  }
  g.rotation.resize(static_cast<size_t>(g.num_vertices));
  for (int c = 0; c < dec.size(); ++c)
    for (int a : dec.circles[static_cast<size_t>(c)]) g.rotation[static_cast<size_t>(c)].push_back(d.head(a).crossing);

  if (d.num_crossings() == 0) {
    g.faces.emplace_back();
    g.face_region.push_back(-1);
    return g;
  }
  auto regions = diagram_faces(d);
  for (size_t r = 0; r < regions.size(); ++r) {
    std::vector<int> boundary;
    for (const auto& corner : regions[r])
      if (!is_circle_corner(d, corner)) boundary.push_back(corner.crossing);
    if (boundary.empty()) continue;
    g.faces.push_back(std::move(boundary));
    g.face_region.push_back(static_cast<int>(r));
  }
  auto empty = empty_sided(d, dec);
  for (int c = 0; c < dec.size(); ++c)
    if (!empty[static_cast<size_t>(c)]) g.embedded = false;
  return g;
}

std::vector<char> empty_sided(const LinkDiagram& d, const SeifertDecomposition& dec) {
  std::vector<char> out(static_cast<size_t>(dec.size()), 0);
  for (int c = 0; c < dec.size(); ++c)
    if (dec.circles[static_cast<size_t>(c)].empty()) out[static_cast<size_t>(c)] = 1;
  if (d.num_crossings() == 0) return out;
  for (const auto& region : diagram_faces(d)) {
    bool all = true;
    for (const auto& corner : region) all = all && is_circle_corner(d, corner);
    if (!all) continue;
    const auto& c0 = region.front();
    out[static_cast<size_t>(dec.circle_of_arc[static_cast<size_t>(d.arc_at(c0.crossing, c0.slot))])] = 1;
  }
  return out;
}

std::vector<int> lone_crossings(const SeifertGraph& g) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : g.edges) ++count[std::minmax(e.u, e.v)];
  std::vector<int> out;
  for (const auto& e : g.edges)
    if (count[std::minmax(e.u, e.v)] == 1) out.push_back(e.crossing);
  return out;
}

std::vector<WeightedEdge> weighted_edges(const SeifertGraph& g) {
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (const auto& e : g.edges) groups[std::minmax(e.u, e.v)].push_back(e.crossing);
  std::vector<WeightedEdge> out;
  for (auto& [uv, xs] : groups) out.push_back({uv.first, uv.second, std::move(xs)});
  return out;
}

bool connected_without(const SeifertGraph& g, const std::vector<int>& removed_edges) {
  if (g.num_vertices <= 1) return true;
  std::vector<char> gone(g.edges.size(), 0);
  for (int e : removed_edges) gone[static_cast<size_t>(e)] = 1;
  UnionFind uf(g.num_vertices);
  int parts = g.num_vertices;
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (!gone[i] && uf.unite(g.edges[i].u, g.edges[i].v)) --parts;
  return parts == 1;
}

bool is_bridge(const SeifertGraph& g, int edge) { return !connected_without(g, {edge}); }

ProperReport is_proper(const SeifertGraph& g) {
  ProperReport r;
  for (const auto& f : g.faces) {
    bool ok = connected_without(g, f);
    r.face_ok.push_back(ok);
    r.proper = r.proper && ok;
  }
  return r;
}

std::optional<std::vector<int>> good_spanning_tree(const SeifertGraph& g, int face) {
  std::vector<char> banned(g.edges.size(), 0);
  for (int e : g.faces.at(static_cast<size_t>(face))) banned[static_cast<size_t>(e)] = 1;
  UnionFind uf(g.num_vertices);
  std::vector<int> tree;
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (!banned[i] && uf.unite(g.edges[i].u, g.edges[i].v)) tree.push_back(static_cast<int>(i));
  if (static_cast<int>(tree.size()) != g.num_vertices - 1) return std::nullopt;
  return tree;
}

std::vector<std::vector<int>> maximal_2cut_sets(const SeifertGraph& g) {
  std::vector<int> lone;
  for (int e : lone_crossings(g))
    if (!is_bridge(g, e)) lone.push_back(e);
  // Forming a 2-edge-cut is an equivalence relation on non-bridge edges.
  const int n = static_cast<int>(lone.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!connected_without(g, {lone[static_cast<size_t>(i)], lone[static_cast<size_t>(j)]})) uf.unite(i, j);
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(lone[static_cast<size_t>(i)]);
  std::vector<std::vector<int>> out;
  for (auto& [root, set] : classes)
    if (set.size() >= 2) out.push_back(std::move(set));
  std::sort(out.begin(), out.end());
  return out;
}

bool flype_normalized(const LinkDiagram& d, const SeifertDecomposition& dec) {
  for (int c = 0; c < dec.size(); ++c) {
    std::vector<int> seq;
    for (int a : dec.circles[static_cast<size_t>(c)]) {
      auto [u, v] = dec.crossing_circles[static_cast<size_t>(d.head(a).crossing)];
      seq.push_back(u == c ? v : u);
    }
    if (seq.empty()) continue;
    // Cyclic runs: each neighbour may start a run at most once.
    std::map<int, int> runs;
    for (size_t i = 0; i < seq.size(); ++i)
      if (seq[i] != seq[(i + seq.size() - 1) % seq.size()]) ++runs[seq[i]];
    for (const auto& [nb, count] : runs)
      if (count > 1) return false;
  }
  // Each maximal 2-cut set must be a path whose internal vertices meet no
  // other edge.
  auto g = seifert_graph(d, dec);
  std::vector<int> total(static_cast<size_t>(g.num_vertices), 0);
  for (const auto& e : g.edges) {
    ++total[static_cast<size_t>(e.u)];
    ++total[static_cast<size_t>(e.v)];
  }
  for (const auto& set : maximal_2cut_sets(g)) {
    std::map<int, int> deg;
    UnionFind uf(g.num_vertices);
    for (int x : set) {
      const auto& e = g.edges[static_cast<size_t>(x)];
      ++deg[e.u];
      ++deg[e.v];
      if (uf.find(e.u) == uf.find(e.v)) return false;
      uf.unite(e.u, e.v);
    }
    int ends = 0;
    for (auto [v, k] : deg) {
      if (k > 2) return false;
      if (k == 1) ++ends;
      else if (total[static_cast<size_t>(v)] != 2) return false;
    }
    if (ends != 2) return false;
  }
  return true;
}

bool nesting_free(const LinkDiagram& d, const SeifertDecomposition& dec) {
  return seifert_graph(d, dec).embedded;
}

std::string graph_json(const SeifertGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.num_vertices;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) edges.push_back({e.crossing, e.u, e.v, e.sign});
  j["edges"] = edges;
  j["rotation"] = g.rotation;
  j["faces"] = g.faces;
  j["embedded"] = g.embedded;
  return j.dump();
}

}  // namespace kribbon
