#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "kribbon/diagram.hpp"
#include "kribbon/homfly.hpp"
#include "kribbon/seifert.hpp"

namespace kribbon {

class RibbonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CircleClass { Large, Medium, Small, Twist };
const char* to_string(CircleClass c);

/// Anti-parallel double of a diagram D with k full twists.  Component 1 runs
/// along D, component 2 is the reversed copy kept on its right.  Each crossing
/// x of D becomes a 2x2 grid junction[x] = {c00, c01, c10, c11}, where cij is
/// the i-th vertical strand (0 = D's under strand, 1 = its copy) passing under
/// the j-th horizontal strand (0 = D's over strand, 1 = its copy).
struct DoubleDiagram {
  LinkDiagram diagram;
  LinkDiagram base;
  int k = 0;
  int twist_arc = -1;  // arc of D carrying the twist region
  std::vector<std::array<int, 4>> junctions;
  std::vector<int> twist_crossings;  // in order along component 1

  SeifertDecomposition dec;
  std::vector<CircleClass> circle_class;
  std::vector<int> medium_of_junction;  // circle id
  // Small circle of each Seifert-graph face of D (face order of seifert_graph(D)).
  std::vector<int> small_of_face;
  // Large circle standing for each Seifert circle of D.
  std::vector<int> large_of_circle;
  std::vector<int> C_set;  // one crossing per junction, component 1 under

  int count(CircleClass c) const;
};

// Requires a special alternating, nesting-free, flype-normal D.  twist_arc < 0
// picks the arc leaving the first crossing of the canonical relabelling of D
// along its under strand.
DoubleDiagram double_diagram(const LinkDiagram& d, int k, int twist_arc = -1);

// Double at k = 0 with every crossing of sign -sign(D) smoothed and the loops
// this frees dropped: large and medium circles only.
LinkDiagram mid_diagram(const LinkDiagram& d);

// The double with only the listed junction crossings of sign -sign(D) kept;
// the others are smoothed.  keep_mask[x] bit 0 keeps c01, bit 1 keeps c10.
LinkDiagram hat_diagram(const DoubleDiagram& dd, const std::vector<int>& keep_mask,
                        std::vector<int>* kept_from = nullptr);

int linking_number(const LinkDiagram& two_component);

std::vector<int> crossing_set_C(const DoubleDiagram& dd);

int rho_k(const LinkDiagram& d, int k);
int braid_index_bound(const LinkDiagram& d, int k);

// E, e, p0h, p0l and xi of the k-twisted double as the case table predicts.
BoundsReport predict_bounds(const LinkDiagram& d, int k);

struct StructurePrediction {
  int mid_e = 0;
  ZMonomial mid_p0l;
  int double_E = 0;
  ZMonomial double_p0h;
  int double_e = 0;
  ZMonomial double_p0l;
};
StructurePrediction predict_structure(const LinkDiagram& d);

// Lowest a-degree data of a hat diagram with `kept` negative crossings on
// s1 large and s2 medium circles.
struct HatPrediction {
  int e = 0;
  ZMonomial p0l;
};
HatPrediction predict_hat(int kept, int s1, int s2);

struct CountCheck {
  std::string name;
  long long actual = 0;
  long long expected = 0;
  bool pass() const { return actual == expected; }
};
// Circle, edge, writhe, class and lone-crossing counts against 2c+2, 4c, 0, ...
std::vector<CountCheck> structural_counts(const DoubleDiagram& dd);

// Flips every crossing of C and simplifies; true when the result is two split
// copies of D (up to orientation of the copy).
bool flipped_C_splits(const DoubleDiagram& dd);

}  // namespace kribbon
