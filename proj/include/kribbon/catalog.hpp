#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kribbon/diagram.hpp"

namespace kribbon {

class NotAKnot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plane multigraph: rotation[v] lists the edge ids at v in counterclockwise
/// order.  A loop-free multigraph is expected; parallel edges may appear.
struct PlaneGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;
};

// Expands weighted simple edges into consecutive parallel edges.  rotation
// lists simple-edge ids counterclockwise at each vertex.
PlaneGraph weighted_plane_graph(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& weights,
                                const std::vector<std::vector<int>>& rotation);

int count_faces(const PlaneGraph& g);
bool is_plane(const PlaneGraph& g);
std::vector<int> bipartition(const PlaneGraph& g);  // empty if not bipartite

struct CatalogEntry {
  std::string name;
  LinkDiagram pd;
  std::string provenance;  // "torus", "plane-graph", "fixture" or "file"
  int c = 0, s = 0, w = 0;
  bool counter_fixture = false;
};

// Positive diagram with Seifert graph g: vertices of colour 0 become
// counterclockwise circles, colour 1 clockwise ones, each edge a crossing.
// Crossing i of the result is edge i.
LinkDiagram diagram_from_plane_graph(const PlaneGraph& g);
CatalogEntry from_plane_graph(const PlaneGraph& g, const std::string& name = "plane-graph");
// Circles and crossings of d reproduce g with its rotation.
bool realizes(const LinkDiagram& d, const PlaneGraph& g);

CatalogEntry gen_torus(int n);

// T(2,3), T(2,5), T(2,7) and every knot from a plane bipartite graph on at
// most 5 vertices with at most 9 edges that is reduced, special alternating,
// nesting-free and flype-normal, deduplicated by canonical key.
const std::vector<CatalogEntry>& builtin_catalog();

// Diagrams outside the catalog's filters, used to exercise negative paths.
std::vector<CatalogEntry> counter_fixtures();

const CatalogEntry* find_entry(const std::string& name);

std::string entry_json(const CatalogEntry& e);

}  // namespace kribbon
