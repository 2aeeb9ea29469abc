#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kribbon {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Slots of a crossing are numbered counterclockwise starting at the incoming
// under-strand: slot 0 = under in, slot 2 = under out.  The over strand runs
// 3 -> 1 at a positive crossing and 1 -> 3 at a negative one.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  bool operator==(const Crossing&) const = default;
};

enum class Role { UnderIn, UnderOut, OverIn, OverOut };

constexpr int slot_of(Role r, int sign) {
  switch (r) {
    case Role::UnderIn: return 0;
    case Role::UnderOut: return 2;
    case Role::OverIn: return sign > 0 ? 3 : 1;
    case Role::OverOut: return sign > 0 ? 1 : 3;
  }
  return -1;
}

constexpr bool is_in_slot(int slot, int sign) {
  return slot == 0 || slot == slot_of(Role::OverIn, sign);
}

constexpr bool is_over_slot(int slot) { return (slot & 1) == 1; }

// Out-slot joined to `in_slot` by the oriented smoothing.
constexpr int smoothing_partner(int in_slot, int sign) {
  return in_slot == 0 ? slot_of(Role::OverOut, sign) : slot_of(Role::UnderOut, sign);
}

struct ArcEnd {
  int crossing = -1;
  int slot = -1;
};

/// An oriented link diagram on the sphere, stored as a PD code with signs.
///
/// Arcs are labelled 0..2c-1.  Components without crossings are kept only as
/// a count of split unknotted loops.  Instances are immutable once built; the
/// constructor validates arc multiplicity, orientation and planarity.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_[static_cast<size_t>(i)]; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_arcs() const { return 2 * num_crossings(); }
  int free_loops() const { return free_loops_; }
  int num_components() const { return num_components_; }

  ArcEnd head(int arc) const { return head_[static_cast<size_t>(arc)]; }
  ArcEnd tail(int arc) const { return tail_[static_cast<size_t>(arc)]; }
  int arc_at(int crossing, int slot) const { return crossings_[static_cast<size_t>(crossing)].arcs[static_cast<size_t>(slot)]; }

  // Component index of an arc; crossing components are numbered 0.. in order
  // of their smallest arc label, free loops come after them.
  int component_of_arc(int arc) const { return arc_component_[static_cast<size_t>(arc)]; }

  // Arcs of a component in traversal order starting from its smallest label.
  std::vector<int> component_arcs(int comp) const;

  // Component of the strand entering the crossing at `slot` (slot or slot+2).
  int component_at(int crossing, int slot) const;

  // Next arc along the orientation after `arc` passes straight through its head.
  int next_arc(int arc) const;

  bool operator==(const LinkDiagram& o) const {
    return crossings_ == o.crossings_ && free_loops_ == o.free_loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<ArcEnd> head_, tail_;
  std::vector<int> arc_component_;
  int free_loops_ = 0;
  int num_components_ = 0;
};

int writhe(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);
// comp is 1-based as in the file format.
LinkDiagram reverse_component(const LinkDiagram& d, int comp);
LinkDiagram switch_crossing(const LinkDiagram& d, int x);
// Oriented smoothing of one crossing.
LinkDiagram smooth_crossing(const LinkDiagram& d, int x);

// Face of the 4-valent diagram graph as the cyclic list of corners it meets.
// A corner (x, s) is the region between slot s and slot s+1 (ccw) at x.
struct Corner {
  int crossing;
  int slot;
};
std::vector<std::vector<Corner>> diagram_faces(const LinkDiagram& d);

// Groups of crossings that are joined by arcs (split pieces), excluding free loops.
std::vector<std::vector<int>> connected_pieces(const LinkDiagram& d);

LinkDiagram sub_diagram(const LinkDiagram& d, const std::vector<int>& crossings);

bool is_nugatory(const LinkDiagram& d, int x);
bool is_reduced(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
bool is_special_alternating(const LinkDiagram& d);

// Split union; the second diagram's arcs are shifted past the first's.
LinkDiagram disjoint_union(const LinkDiagram& x, const LinkDiagram& y);
// Band sum cutting arc `ax` of x and arc `ay` of y.  A crossingless side
// contributes nothing.
LinkDiagram connected_sum(const LinkDiagram& x, const LinkDiagram& y, int ax = 0, int ay = 0);

// R1 kinks and R2 bigons removed until none remain.
LinkDiagram simplify(const LinkDiagram& d);

// Strand rewiring used by surgery: each listed crossing is deleted and its
// strands reconnected either straight through or along the oriented smoothing.
enum class Removal { Keep, PassThrough, Smooth };
LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<Removal>& how,
                             std::vector<int>* kept_from = nullptr);

// ---- canonical form -------------------------------------------------------

struct CanonicalForm {
  std::string key;
  LinkDiagram diagram;
  std::vector<int> crossing_from;  // canonical crossing i came from this crossing of the input
};

// Lexicographically minimal traversal code over every choice of starting
// arc.  Relabelled diagrams have equal keys.
CanonicalForm canonical_form(const LinkDiagram& d);

// ---- text formats -----------------------------------------------------------

struct PdRecord {
  std::string name;
  LinkDiagram diagram;
};

LinkDiagram parse_pd(std::string_view text);
std::vector<PdRecord> parse_pd_file(std::string_view text);
std::string to_pd(const LinkDiagram& d, std::string_view name = "diagram");

}  // namespace kribbon
