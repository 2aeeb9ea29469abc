#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kribbon/diagram.hpp"
#include "kribbon/ribbon.hpp"
#include "kribbon/seifert.hpp"

namespace kribbon {

class MPError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Overpass reroute at a lone crossing.  `hug` names the circle the new
// overpass runs around: 0 = the circle through the under-in slot, 1 = the
// circle through the over-in slot.  The path stays on the side of that circle
// where its neighbours sit and passes over every strand attached there.
struct MPMove {
  int crossing = -1;
  int hug = 0;
};

struct MPResult {
  LinkDiagram diagram;
  std::vector<int> origin;  // old crossing of each new crossing, -1 if created
};

// Lone and between distinct circles.  try_mp additionally requires the circle
// count to drop by one.
bool mp_legal(const LinkDiagram& d, const SeifertDecomposition& dec, const MPMove& m, std::string* why = nullptr);

// Builds the rerouted diagram (always an isotopy); mp_reroute additionally
// requires the circle count to drop by one, try_mp returns nullopt instead.
MPResult reroute_unchecked(const LinkDiagram& d, const MPMove& m);
MPResult mp_reroute(const LinkDiagram& d, const MPMove& m);
std::optional<MPResult> try_mp(const LinkDiagram& d, const MPMove& m);

// Counts the reroute must produce: s - 1, w - sign, c - 1 + 2(deg - 1).
struct MPPrediction {
  int circles = 0;
  int crossings = 0;
  int writhe = 0;
};
MPPrediction predict_mp(const LinkDiagram& d, const MPMove& m);

struct RSearch {
  int value = 0;
  bool exact = true;
  std::int64_t states = 0;
};
// Longest sequence of legal moves on lone crossings of the given sign.
RSearch r_search(const LinkDiagram& d, int sign, std::int64_t budget = 200'000);
inline RSearch r_plus(const LinkDiagram& d, std::int64_t budget = 200'000) { return r_search(d, 1, budget); }
inline RSearch r_minus(const LinkDiagram& d, std::int64_t budget = 200'000) { return r_search(d, -1, budget); }

struct CertifiedStep {
  MPMove move;       // crossing id in the diagram the step applies to
  int source = -1;   // the same crossing in the starting diagram
  int sign = 0;
  int circles_before = 0;
  int circles_after = 0;
};

struct CertifiedSequence {
  LinkDiagram start;
  LinkDiagram end;
  std::vector<CertifiedStep> steps;
  std::vector<int> faces;  // faces of G_S(D) in elimination order (negative walk)
};

// Face elimination over G_S(D) rooted at face f0, deleting at each step an
// edge proper for an eliminated face; then reroutes at the partners outside C
// of the deleted edges, searching over order and hug.  With `smoothed` (a
// crossing of C) the root is the face of its partner and that partner is
// rerouted as well.  Throws MPError when no elimination tree replays.
CertifiedSequence certified_negative_sequence(const DoubleDiagram& dd, int f0, std::optional<int> smoothed = std::nullopt);

// One positive reroute per edge of a spanning tree of G_S(D) avoiding the
// boundary of `face`, on the hat diagram selected by keep_mask.
CertifiedSequence certified_positive_sequence(const DoubleDiagram& dd, const std::vector<int>& keep_mask, int face);

// Applies each step in order, checking legality and the circle count.
bool replay(const CertifiedSequence& seq, std::string* why = nullptr);

}  // namespace kribbon
