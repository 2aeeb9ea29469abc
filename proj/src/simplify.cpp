#include <optional>

#include "kribbon/diagram.hpp"

namespace kribbon {

namespace {

// A crossing carrying a curl: some arc leaves and re-enters it at adjacent slots.
std::optional<int> find_kink(const LinkDiagram& d) {
  for (int a = 0; a < d.num_arcs(); ++a) {
    ArcEnd t = d.tail(a), h = d.head(a);
    if (t.crossing == h.crossing && ((t.slot - h.slot + 4) % 4) % 2 == 1) return t.crossing;
  }
  return std::nullopt;
}

// Two crossings bounding a bigon face whose one edge is over at both ends.
std::optional<std::pair<int, int>> find_bigon(const LinkDiagram& d) {
  for (const auto& face : diagram_faces(d)) {
    if (face.size() != 2) continue;
    int x = face[0].crossing, y = face[1].crossing;
    if (x == y) continue;
    int s = face[0].slot;
    int alpha = d.arc_at(x, s);
    auto other_end = [&](int arc, int crossing) {
      ArcEnd t = d.tail(arc), h = d.head(arc);
      return t.crossing == crossing ? h : t;
    };
    if (other_end(alpha, x).crossing != y) continue;
    bool over_x = is_over_slot(s);
    if (over_x == is_over_slot(other_end(alpha, x).slot)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

}  // namespace

LinkDiagram simplify(const LinkDiagram& input) {
  LinkDiagram d = input;
  while (true) {
    std::vector<Removal> how(static_cast<size_t>(d.num_crossings()), Removal::Keep);
    if (auto k = find_kink(d)) {
      how[static_cast<size_t>(*k)] = Removal::PassThrough;
    } else if (auto b = find_bigon(d)) {
      how[static_cast<size_t>(b->first)] = Removal::PassThrough;
      how[static_cast<size_t>(b->second)] = Removal::PassThrough;
    } else {
      return d;
    }
    d = remove_crossings(d, how);
  }
}

}  // namespace kribbon
