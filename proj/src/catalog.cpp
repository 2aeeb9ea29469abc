#include "kribbon/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "kribbon/builder.hpp"
#include "kribbon/seifert.hpp"

namespace kribbon {

PlaneGraph weighted_plane_graph(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& weights,
                                const std::vector<std::vector<int>>& rotation) {
  if (weights.size() != edges.size()) throw CatalogError("one weight per edge");
  PlaneGraph g;
  g.num_vertices = n;
  std::vector<std::vector<int>> copies(edges.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    if (weights[e] < 1) throw CatalogError("edge weights must be positive");
    for (int i = 0; i < weights[e]; ++i) {
      copies[e].push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back(edges[e]);
    }
  }
  g.rotation.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int e : rotation[static_cast<size_t>(v)]) {
      // Seen from the two ends the parallel bundle runs in opposite directions.
      auto run = copies[static_cast<size_t>(e)];
      if (edges[static_cast<size_t>(e)].second == v) std::reverse(run.begin(), run.end());
      for (int x : run) g.rotation[static_cast<size_t>(v)].push_back(x);
    }
  return g;
}

int count_faces(const PlaneGraph& g) {
  // Dart 2e goes first -> second, 2e+1 the other way.  The face successor of a
  // dart u->v is the dart leaving v along the edge after e counterclockwise.
  const int m = static_cast<int>(g.edges.size());
  auto head = [&](int dart) {
    auto [a, b] = g.edges[static_cast<size_t>(dart / 2)];
    return dart % 2 ? a : b;
  };
  auto leaving = [&](int e, int v) { return g.edges[static_cast<size_t>(e)].first == v ? 2 * e : 2 * e + 1; };
  std::vector<char> seen(static_cast<size_t>(2 * m), 0);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (seen[static_cast<size_t>(d0)]) continue;
    ++faces;
    for (int d = d0; !seen[static_cast<size_t>(d)];) {
      seen[static_cast<size_t>(d)] = 1;
      int v = head(d);
      const auto& rot = g.rotation[static_cast<size_t>(v)];
      auto it = std::find(rot.begin(), rot.end(), d / 2);
      if (it == rot.end()) throw CatalogError("rotation misses an incident edge");
      size_t i = static_cast<size_t>(it - rot.begin());
      int next = rot[(i + 1) % rot.size()];
      d = leaving(next, v);
    }
  }
  return faces;
}

bool is_plane(const PlaneGraph& g) {
  std::vector<int> deg(static_cast<size_t>(g.num_vertices), 0);
  for (auto [a, b] : g.edges) {
    if (a == b) return false;
    ++deg[static_cast<size_t>(a)];
    ++deg[static_cast<size_t>(b)];
  }
  for (int v = 0; v < g.num_vertices; ++v)
    if (static_cast<int>(g.rotation[static_cast<size_t>(v)].size()) != deg[static_cast<size_t>(v)]) return false;
  const int m = static_cast<int>(g.edges.size());
  if (m == 0) return g.num_vertices == 1;
  return g.num_vertices - m + count_faces(g) == 2;
}

std::vector<int> bipartition(const PlaneGraph& g) {
  std::vector<int> colour(static_cast<size_t>(g.num_vertices), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices));
  for (auto [a, b] : g.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  for (int s = 0; s < g.num_vertices; ++s) {
    if (colour[static_cast<size_t>(s)] >= 0) continue;
    colour[static_cast<size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[static_cast<size_t>(v)]) {
        if (colour[static_cast<size_t>(u)] < 0) {
          colour[static_cast<size_t>(u)] = 1 - colour[static_cast<size_t>(v)];
          stack.push_back(u);
        } else if (colour[static_cast<size_t>(u)] == colour[static_cast<size_t>(v)]) {
          return {};
        }
      }
    }
  }
  return colour;
}

namespace {

std::vector<int> circle_order(const PlaneGraph& g, const std::vector<int>& colour, int v) {
  auto order = g.rotation[static_cast<size_t>(v)];
  if (colour[static_cast<size_t>(v)] == 1) std::reverse(order.begin(), order.end());
  return order;
}

bool cyclic_equal(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (size_t r = 0; r < y.size(); ++r) {
    bool ok = true;
    for (size_t i = 0; i < x.size() && ok; ++i) ok = x[i] == y[(i + r) % y.size()];
    if (ok) return true;
  }
  return false;
}

}  // namespace

LinkDiagram diagram_from_plane_graph(const PlaneGraph& g) {
  if (g.edges.empty()) throw CatalogError("graph has no edges");
  if (!is_plane(g)) throw CatalogError("rotation system is not planar");
  auto colour = bipartition(g);
  if (colour.empty()) throw CatalogError("graph is not bipartite");
  DiagramBuilder b;
  for (size_t e = 0; e < g.edges.size(); ++e) b.add_crossing(1);
  for (int v = 0; v < g.num_vertices; ++v) {
    auto order = circle_order(g, colour, v);
    for (size_t i = 0; i < order.size(); ++i) {
      int x = order[i], y = order[(i + 1) % order.size()];
      if (colour[static_cast<size_t>(v)] == 0) b.connect(DiagramBuilder::uo(x), DiagramBuilder::oi(y));
      else b.connect(DiagramBuilder::oo(x), DiagramBuilder::ui(y));
    }
  }
  return b.build();
}

bool realizes(const LinkDiagram& d, const PlaneGraph& g) {
  if (d.num_crossings() != static_cast<int>(g.edges.size())) return false;
  auto colour = bipartition(g);
  if (colour.empty()) return false;
  auto dec = decompose(d);
  if (dec.size() != g.num_vertices) return false;
  std::vector<int> circle(static_cast<size_t>(g.num_vertices), -1);
  for (int v = 0; v < g.num_vertices; ++v) {
    int e = g.rotation[static_cast<size_t>(v)].front();
    circle[static_cast<size_t>(v)] = dec.crossing_circles[static_cast<size_t>(e)][colour[static_cast<size_t>(v)] == 0 ? 1 : 0];
  }
  std::set<int> distinct(circle.begin(), circle.end());
  if (static_cast<int>(distinct.size()) != g.num_vertices) return false;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    std::set<int> want{circle[static_cast<size_t>(a)], circle[static_cast<size_t>(b)]};
    auto cc = dec.crossing_circles[e];
    if (want != std::set<int>{cc[0], cc[1]}) return false;
  }
  auto sg = seifert_graph(d, dec);
  for (int v = 0; v < g.num_vertices; ++v)
    if (!cyclic_equal(sg.rotation[static_cast<size_t>(circle[static_cast<size_t>(v)])], circle_order(g, colour, v)))
      return false;
  return true;
}

CatalogEntry from_plane_graph(const PlaneGraph& g, const std::string& name) {
  LinkDiagram d = diagram_from_plane_graph(g);
  if (d.num_components() != 1)
    throw NotAKnot(name + ": graph gives a " + std::to_string(d.num_components()) + "-component link");
  if (!realizes(d, g)) throw CatalogError(name + ": diagram does not reproduce the graph");
  return {name, d, "plane-graph", d.num_crossings(), decompose(d).size(), writhe(d), false};
}

CatalogEntry gen_torus(int n) {
  if (n < 3) throw CatalogError("T(2,n) needs n >= 3 for a reduced diagram");
  if (n % 2 == 0) throw CatalogError("T(2,n) with even n is a link");
  auto e = from_plane_graph(weighted_plane_graph(2, {{0, 1}}, {n}, {{0}, {0}}), "T(2," + std::to_string(n) + ")");
  e.provenance = "torus";
  return e;
}

namespace {

struct SimpleGraph {
  int n;
  std::vector<std::pair<int, int>> edges;
};

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); };
  int parts = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<size_t>(ra)] = rb;
      --parts;
    }
  }
  return parts == 1;
}

// Connected bipartite simple graphs on n vertices up to isomorphism.
std::vector<SimpleGraph> bipartite_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<SimpleGraph> out;
  std::vector<int> perm(static_cast<size_t>(n));
  for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) es.push_back(pairs[i]);
    if (static_cast<int>(es.size()) < n - 1 || !connected(n, es)) continue;
    PlaneGraph probe{n, es, {}};
    if (bipartition(probe).empty()) continue;
    std::vector<std::pair<int, int>> best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::pair<int, int>> img;
      for (auto [a, b] : es) {
        int x = perm[static_cast<size_t>(a)], y = perm[static_cast<size_t>(b)];
        img.emplace_back(std::min(x, y), std::max(x, y));
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back({n, best});
  }
  return out;
}

// Every rotation system of a simple graph, first edge at each vertex fixed.
void for_each_rotation(const SimpleGraph& g, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> inc(static_cast<size_t>(g.n));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    inc[static_cast<size_t>(g.edges[e].first)].push_back(static_cast<int>(e));
    inc[static_cast<size_t>(g.edges[e].second)].push_back(static_cast<int>(e));
  }
  std::vector<std::vector<int>> rot = inc;
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n) {
      fn(rot);
      return;
    }
    auto& r = rot[static_cast<size_t>(v)];
    r = inc[static_cast<size_t>(v)];
    if (r.size() <= 2) {
      rec(v + 1);
      return;
    }
    do rec(v + 1);
    while (std::next_permutation(r.begin() + 1, r.end()));
  };
  rec(0);
}

void for_each_weighting(size_t m, int budget, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(m, 1);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == m) {
      fn(w);
      return;
    }
    for (int x = 1; x <= left - static_cast<int>(m - i - 1); ++x) {
      w[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, budget);
}

bool catalog_quality(const LinkDiagram& d) {
  if (d.num_components() != 1 || !is_reduced(d) || !is_special_alternating(d)) return false;
  auto dec = decompose(d);
  return nesting_free(d, dec) && flype_normalized(d, dec);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  std::set<std::string> keys;
  for (int n : {3, 5, 7}) {
    auto e = gen_torus(n);
    keys.insert(canonical_form(e.pd).key);
    out.push_back(std::move(e));
  }
  struct Found {
    int c, s;
    std::string key;
    LinkDiagram d;
  };
  std::vector<Found> found;
  for (int n = 2; n <= 5; ++n)
    for (const auto& sg : bipartite_graphs(n)) {
      if (sg.edges.size() > 9) continue;
      for_each_rotation(sg, [&](const std::vector<std::vector<int>>& rot) {
        if (!is_plane(PlaneGraph{sg.n, sg.edges, rot})) return;
        for_each_weighting(sg.edges.size(), 9, [&](const std::vector<int>& w) {
          auto g = weighted_plane_graph(sg.n, sg.edges, w, rot);
          LinkDiagram d = diagram_from_plane_graph(g);
          if (!catalog_quality(d)) return;
          auto key = canonical_form(d).key;
          if (!keys.insert(key).second) return;
          found.push_back({d.num_crossings(), sg.n, key, d});
        });
      });
    }
  std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
    return std::tie(x.c, x.s, x.key) < std::tie(y.c, y.s, y.key);
  });
  std::map<std::pair<int, int>, int> serial;
  for (auto& f : found) {
    int idx = ++serial[{f.c, f.s}];
    std::string name = "pg" + std::to_string(f.c) + "s" + std::to_string(f.s) + "-" + std::to_string(idx);
    out.push_back({name, f.d, "plane-graph", f.c, f.s, writhe(f.d), false});
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

std::vector<CatalogEntry> counter_fixtures() {
  std::vector<CatalogEntry> out;
  // Square with lone edges on opposite sides: a knot, but its 2-cut set is
  // not a path, so it is not flype-normal.
  auto g = weighted_plane_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 2, 1, 3}, {{0, 3}, {0, 1}, {1, 2}, {2, 3}});
  auto e = from_plane_graph(g, "square-1213");
  e.provenance = "fixture";
  e.counter_fixture = true;
  out.push_back(e);
  return out;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return &e;
  static const std::vector<CatalogEntry> extra = counter_fixtures();
  for (const auto& e : extra)
    if (e.name == name) return &e;
  return nullptr;
}

std::string entry_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  j["provenance"] = e.provenance;
  j["c"] = e.c;
  j["s"] = e.s;
  j["w"] = e.w;
  j["components"] = e.pd.num_components();
  j["counter_fixture"] = e.counter_fixture;
  j["pd"] = to_pd(e.pd, e.name);
  return j.dump();
}

}  // namespace kribbon
