#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kribbon/diagram.hpp"

namespace kribbon {

struct SeifertDecomposition {
  // Arcs of each circle in orientation order.  Free loops of the diagram are
  // circles with no arcs and come last.
  std::vector<std::vector<int>> circles;
  std::vector<int> circle_of_arc;
  // For each crossing: the circle through its under-in slot and the circle
  // through its over-in slot.
  std::vector<std::array<int, 2>> crossing_circles;

  int size() const { return static_cast<int>(circles.size()); }
};

SeifertDecomposition decompose(const LinkDiagram& d);

struct SeifertEdge {
  int crossing;
  int u, v;
  int sign;
};

/// Seifert graph with the plane structure inherited from the diagram.
/// Edge i is crossing i.  Faces are the diagram regions that touch at least
/// one crossing from between its two circles; each face lists its boundary
/// edges in cyclic order.
struct SeifertGraph {
  int num_vertices = 0;
  std::vector<SeifertEdge> edges;
  std::vector<std::vector<int>> rotation;  // crossings met along each circle
  std::vector<std::vector<int>> faces;
  std::vector<int> face_region;  // diagram region index of each face
  bool embedded = true;           // false when some circle has no empty side

  int num_edges() const { return static_cast<int>(edges.size()); }
  int multiplicity(int u, int v) const;
};

SeifertGraph seifert_graph(const LinkDiagram& d, const SeifertDecomposition& dec);
inline SeifertGraph seifert_graph(const LinkDiagram& d) { return seifert_graph(d, decompose(d)); }

std::vector<int> lone_crossings(const SeifertGraph& g);

// Weighted simple form: one entry per adjacent vertex pair with its crossings.
struct WeightedEdge {
  int u, v;
  std::vector<int> crossings;
  int weight() const { return static_cast<int>(crossings.size()); }
};
std::vector<WeightedEdge> weighted_edges(const SeifertGraph& g);

// Connectivity of the graph with the listed edges deleted.  Every vertex
// counts, so a vertex left without edges disconnects the graph.
bool connected_without(const SeifertGraph& g, const std::vector<int>& removed_edges);
bool is_bridge(const SeifertGraph& g, int edge);

struct ProperReport {
  bool proper = true;
  std::vector<bool> face_ok;
};
ProperReport is_proper(const SeifertGraph& g);

std::optional<std::vector<int>> good_spanning_tree(const SeifertGraph& g, int face);

std::vector<std::vector<int>> maximal_2cut_sets(const SeifertGraph& g);

// Per circle: one side of it is a region made only of its own corners.
std::vector<char> empty_sided(const LinkDiagram& d, const SeifertDecomposition& dec);

bool flype_normalized(const LinkDiagram& d, const SeifertDecomposition& dec);
bool nesting_free(const LinkDiagram& d, const SeifertDecomposition& dec);

// Region-by-region description: circle corners versus crossing corners.
bool is_circle_corner(const LinkDiagram& d, Corner c);

std::string graph_json(const SeifertGraph& g);

}  // namespace kribbon
