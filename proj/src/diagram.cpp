#include "kribbon/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "kribbon/builder.hpp"

namespace kribbon {

namespace {

Role role_of_slot(int slot, int sign) {
  if (slot == 0) return Role::UnderIn;
  if (slot == 2) return Role::UnderOut;
  return is_in_slot(slot, sign) ? Role::OverIn : Role::OverOut;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw DiagramError("negative free loop count");
  const int n = num_crossings();
  const int arcs = 2 * n;
  head_.assign(static_cast<size_t>(arcs), ArcEnd{});
  tail_.assign(static_cast<size_t>(arcs), ArcEnd{});
  std::vector<int> uses(static_cast<size_t>(arcs), 0);
  for (int x = 0; x < n; ++x) {
    const auto& c = crossings_[static_cast<size_t>(x)];
    if (c.sign != 1 && c.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
    for (int s = 0; s < 4; ++s) {
      int a = c.arcs[static_cast<size_t>(s)];
      if (a < 0 || a >= arcs) throw DiagramError("arc label out of range");
      if (++uses[static_cast<size_t>(a)] > 2) throw DiagramError("arc multiplicity: arc used more than twice");
      auto& end = is_in_slot(s, c.sign) ? head_[static_cast<size_t>(a)] : tail_[static_cast<size_t>(a)];
      if (end.crossing >= 0)
        throw DiagramError("orientation inconsistency: arc " + std::to_string(a) + " entered or left twice");
      end = {x, s};
    }
  }
  for (int a = 0; a < arcs; ++a)
    if (uses[static_cast<size_t>(a)] != 2) throw DiagramError("arc multiplicity: arc not used exactly twice");

  arc_component_.assign(static_cast<size_t>(arcs), -1);
  int comp = 0;
  for (int a = 0; a < arcs; ++a) {
    if (arc_component_[static_cast<size_t>(a)] >= 0) continue;
    int b = a;
    do {
      arc_component_[static_cast<size_t>(b)] = comp;
      b = next_arc(b);
    } while (b != a);
    ++comp;
  }
  num_components_ = comp + free_loops_;

  // genus-0 check, piece by piece
  auto faces = diagram_faces(*this);
  auto pieces = connected_pieces(*this);
  std::vector<int> piece_of(static_cast<size_t>(n), -1);
  for (size_t p = 0; p < pieces.size(); ++p)
    for (int x : pieces[p]) piece_of[static_cast<size_t>(x)] = static_cast<int>(p);
  std::vector<int> face_count(pieces.size(), 0);
  for (const auto& f : faces) ++face_count[static_cast<size_t>(piece_of[static_cast<size_t>(f.front().crossing)])];
  for (size_t p = 0; p < pieces.size(); ++p) {
    int v = static_cast<int>(pieces[p].size());
    if (v - 2 * v + face_count[p] != 2)
      throw DiagramError("non-planar rotation system (Euler characteristic != 2)");
  }
}

int LinkDiagram::next_arc(int arc) const {
  ArcEnd h = head(arc);
  return arc_at(h.crossing, (h.slot + 2) % 4);
}

std::vector<int> LinkDiagram::component_arcs(int comp) const {
  std::vector<int> out;
  for (int a = 0; a < num_arcs(); ++a) {
    if (component_of_arc(a) != comp) continue;
    int b = a;
    do {
      out.push_back(b);
      b = next_arc(b);
    } while (b != a);
    break;
  }
  return out;
}

int LinkDiagram::component_at(int crossing, int slot) const {
  return component_of_arc(arc_at(crossing, slot));
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

namespace {
Crossing switched(const Crossing& c) {
  Crossing out;
  for (int i = 0; i < 4; ++i)
    out.arcs[static_cast<size_t>(i)] = c.arcs[static_cast<size_t>(c.sign > 0 ? (i + 3) % 4 : (i + 1) % 4)];
  out.sign = -c.sign;
  return out;
}
}  // namespace

LinkDiagram switch_crossing(const LinkDiagram& d, int x) {
  auto xs = d.crossings();
  xs.at(static_cast<size_t>(x)) = switched(xs[static_cast<size_t>(x)]);
  return LinkDiagram(std::move(xs), d.free_loops());
}

LinkDiagram mirror(const LinkDiagram& d) {
  auto xs = d.crossings();
  for (auto& c : xs) c = switched(c);
  return LinkDiagram(std::move(xs), d.free_loops());
}

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
  if (comp < 1 || comp > d.num_components()) throw DiagramError("component index out of range");
  int k = comp - 1;
  auto xs = d.crossings();
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& c = d.crossing(x);
    bool ru = d.component_at(x, 0) == k;
    bool ro = d.component_at(x, 1) == k;
    Crossing nc = c;
    if (ru)
      for (int i = 0; i < 4; ++i) nc.arcs[static_cast<size_t>(i)] = c.arcs[static_cast<size_t>((i + 2) % 4)];
    if (ru != ro) nc.sign = -c.sign;
    xs[static_cast<size_t>(x)] = nc;
  }
  return LinkDiagram(std::move(xs), d.free_loops());
}

LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<Removal>& how, std::vector<int>* kept_from) {
  const int n = d.num_crossings();
  if (static_cast<int>(how.size()) != n) throw DiagramError("remove_crossings: size mismatch");
  DiagramBuilder b;
  std::vector<int> node(static_cast<size_t>(n), -1), j1(static_cast<size_t>(n), -1), j2(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (how[static_cast<size_t>(x)] == Removal::Keep) {
      node[static_cast<size_t>(x)] = b.add_crossing(d.crossing(x).sign);
    } else {
      j1[static_cast<size_t>(x)] = b.add_joint();  // entered from the under-in slot
      j2[static_cast<size_t>(x)] = b.add_joint();  // entered from the over-in slot
    }
  }
  auto port = [&](int x, int slot) -> DiagramBuilder::Port {
    int sign = d.crossing(x).sign;
    Role r = role_of_slot(slot, sign);
    auto h = how[static_cast<size_t>(x)];
    if (h == Removal::Keep) return {node[static_cast<size_t>(x)], r};
    switch (r) {
      case Role::UnderIn: return DiagramBuilder::in(j1[static_cast<size_t>(x)]);
      case Role::OverIn: return DiagramBuilder::in(j2[static_cast<size_t>(x)]);
      case Role::UnderOut:
        return DiagramBuilder::out(h == Removal::PassThrough ? j1[static_cast<size_t>(x)] : j2[static_cast<size_t>(x)]);
      case Role::OverOut:
        return DiagramBuilder::out(h == Removal::PassThrough ? j2[static_cast<size_t>(x)] : j1[static_cast<size_t>(x)]);
    }
    return {};
  };
  for (int a = 0; a < d.num_arcs(); ++a) {
    ArcEnd t = d.tail(a), h = d.head(a);
    b.connect(port(t.crossing, t.slot), port(h.crossing, h.slot));
  }
  for (int i = 0; i < d.free_loops(); ++i) b.add_free_loop();
  std::vector<int> origin;
  LinkDiagram out = b.build(&origin);
  if (kept_from) {
    std::vector<int> back(static_cast<size_t>(2 * n + n), -1);
    for (int x = 0; x < n; ++x)
      if (node[static_cast<size_t>(x)] >= 0) back[static_cast<size_t>(node[static_cast<size_t>(x)])] = x;
    kept_from->clear();
    for (int o : origin) kept_from->push_back(back[static_cast<size_t>(o)]);
  }
  return out;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int x) {
  std::vector<Removal> how(static_cast<size_t>(d.num_crossings()), Removal::Keep);
  how.at(static_cast<size_t>(x)) = Removal::Smooth;
  return remove_crossings(d, how);
}

std::vector<std::vector<Corner>> diagram_faces(const LinkDiagram& d) {
  const int arcs = d.num_arcs();
  // dart 2a = arc a forward (arrives at head), 2a+1 = backward (arrives at tail)
  std::vector<char> used(static_cast<size_t>(2 * arcs), 0);
  std::vector<std::vector<Corner>> faces;
  for (int start = 0; start < 2 * arcs; ++start) {
    if (used[static_cast<size_t>(start)]) continue;
    std::vector<Corner> face;
    int dart = start;
    while (!used[static_cast<size_t>(dart)]) {
      used[static_cast<size_t>(dart)] = 1;
      int a = dart / 2;
      ArcEnd at = (dart % 2 == 0) ? d.head(a) : d.tail(a);
      int s = (at.slot + 3) % 4;
      face.push_back({at.crossing, s});
      int b = d.arc_at(at.crossing, s);
      ArcEnd bt = d.tail(b);
      bool leaves_forward = bt.crossing == at.crossing && bt.slot == s;
      dart = 2 * b + (leaves_forward ? 0 : 1);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<std::vector<int>> connected_pieces(const LinkDiagram& d) {
  const int n = d.num_crossings();
  UnionFind uf(n);
  for (int a = 0; a < d.num_arcs(); ++a) uf.unite(d.tail(a).crossing, d.head(a).crossing);
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, xs] : groups) out.push_back(std::move(xs));
  std::sort(out.begin(), out.end());
  return out;
}

LinkDiagram sub_diagram(const LinkDiagram& d, const std::vector<int>& crossings) {
  std::vector<int> relabel(static_cast<size_t>(d.num_arcs()), -1);
  std::vector<Crossing> xs;
  int next = 0;
  for (int x : crossings) {
    Crossing c = d.crossing(x);
    for (auto& a : c.arcs) {
      auto& r = relabel[static_cast<size_t>(a)];
      if (r < 0) r = next++;
      a = r;
    }
    xs.push_back(c);
  }
  return LinkDiagram(std::move(xs), 0);
}

bool is_nugatory(const LinkDiagram& d, int x) {
  for (const auto& f : diagram_faces(d)) {
    int hits = 0;
    for (const auto& c : f) hits += c.crossing == x;
    if (hits >= 2) return true;
  }
  return false;
}

bool is_reduced(const LinkDiagram& d) {
  for (const auto& f : diagram_faces(d)) {
    std::vector<int> xs;
    for (const auto& c : f) xs.push_back(c.crossing);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return false;
  }
  return true;
}

bool is_alternating(const LinkDiagram& d) {
  for (int a = 0; a < d.num_arcs(); ++a)
    if (is_over_slot(d.tail(a).slot) == is_over_slot(d.head(a).slot)) return false;
  return true;
}

bool is_special_alternating(const LinkDiagram& d) {
  if (d.num_components() != 1) return false;
  if (d.num_crossings() == 0) return true;
  int s0 = d.crossing(0).sign;
  for (const auto& c : d.crossings())
    if (c.sign != s0) return false;
  return is_reduced(d) && is_alternating(d);
}

// ---- PD text ----------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct RawRecord {
  std::string name = "diagram";
  int components = -1;
  std::vector<std::pair<int, std::array<long, 4>>> xs;
};

[[noreturn]] void syntax(int line, const std::string& what) {
  throw DiagramError("syntax error (line " + std::to_string(line) + "): " + what);
}

void parse_header(std::string_view line, int lineno, RawRecord& rec) {
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) syntax(lineno, "expected key=value in header");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "name") {
      rec.name = val;
    } else if (key == "components") {
      int v = 0;
      auto r = std::from_chars(val.data(), val.data() + val.size(), v);
      if (r.ec != std::errc{} || r.ptr != val.data() + val.size() || v < 0) syntax(lineno, "bad component count");
      rec.components = v;
    } else {
      syntax(lineno, "unknown header key '" + key + "'");
    }
  }
}

void parse_crossings(std::string_view line, int lineno, RawRecord& rec) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= line.size()) return;
    if (line[i] != 'X') syntax(lineno, "expected 'X'");
    ++i;
    if (i >= line.size() || (line[i] != '+' && line[i] != '-')) syntax(lineno, "expected crossing sign '+' or '-'");
    int sign = line[i] == '+' ? 1 : -1;
    ++i;
    if (i >= line.size() || line[i] != '[') syntax(lineno, "expected '['");
    ++i;
    std::array<long, 4> labels{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      long v = 0;
      auto r = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (r.ec != std::errc{}) syntax(lineno, "expected arc label");
      i = static_cast<size_t>(r.ptr - line.data());
      labels[static_cast<size_t>(k)] = v;
      skip_ws();
      char want = k < 3 ? ',' : ']';
      if (i >= line.size() || line[i] != want) syntax(lineno, std::string("expected '") + want + "'");
      ++i;
    }
    rec.xs.push_back({sign, labels});
  }
}

LinkDiagram finish(const RawRecord& rec) {
  std::map<long, int> relabel;
  std::map<long, int> count;
  for (const auto& [sign, ls] : rec.xs)
    for (long l : ls) {
      if (++count[l] > 2) throw DiagramError("arc multiplicity: label " + std::to_string(l) + " used more than twice");
      relabel.emplace(l, 0);
    }
  for (const auto& [l, n] : count)
    if (n != 2) throw DiagramError("arc multiplicity: label " + std::to_string(l) + " used once");
  int next = 0;
  for (auto& [l, v] : relabel) v = next++;
  std::vector<Crossing> xs;
  for (const auto& [sign, ls] : rec.xs) {
    Crossing c;
    c.sign = sign;
    for (int k = 0; k < 4; ++k) c.arcs[static_cast<size_t>(k)] = relabel[ls[static_cast<size_t>(k)]];
    xs.push_back(c);
  }
  LinkDiagram probe(xs, 0);
  int loops = 0;
  if (rec.components >= 0) {
    loops = rec.components - probe.num_components();
    if (loops < 0) throw DiagramError("header declares fewer components than the crossings define");
  } else if (xs.empty()) {
    loops = 1;
  }
  return LinkDiagram(std::move(xs), loops);
}

}  // namespace

std::vector<PdRecord> parse_pd_file(std::string_view text) {
  std::vector<RawRecord> raws;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("name=", 0) == 0 || line.rfind("components=", 0) == 0) {
      raws.emplace_back();
      parse_header(line, lineno, raws.back());
    } else {
      if (raws.empty()) raws.emplace_back();
      parse_crossings(line, lineno, raws.back());
    }
  }
  std::vector<PdRecord> out;
  for (const auto& r : raws) out.push_back({r.name, finish(r)});
  return out;
}

LinkDiagram parse_pd(std::string_view text) {
  auto recs = parse_pd_file(text);
  if (recs.size() != 1) throw DiagramError("expected exactly one diagram record, found " + std::to_string(recs.size()));
  return recs.front().diagram;
}

std::string to_pd(const LinkDiagram& d, std::string_view name) {
  std::ostringstream out;
  out << "name=" << name << " components=" << d.num_components() << '\n';
  for (const auto& c : d.crossings()) {
    out << 'X' << (c.sign > 0 ? '+' : '-') << '[';
    for (int k = 0; k < 4; ++k) out << (k ? "," : "") << c.arcs[static_cast<size_t>(k)] + 1;
    out << "]\n";
  }
  return out.str();
}

}  // namespace kribbon

namespace kribbon {

LinkDiagram disjoint_union(const LinkDiagram& x, const LinkDiagram& y) {
  auto xs = x.crossings();
  for (auto c : y.crossings()) {
    for (auto& a : c.arcs) a += x.num_arcs();
    xs.push_back(c);
  }
  return LinkDiagram(std::move(xs), x.free_loops() + y.free_loops());
}

LinkDiagram connected_sum(const LinkDiagram& x, const LinkDiagram& y, int ax, int ay) {
  if (y.num_crossings() == 0) {
    int loops = x.free_loops() + y.free_loops() - (y.free_loops() > 0 ? 1 : 0);
    return LinkDiagram(x.crossings(), loops);
  }
  if (x.num_crossings() == 0) return connected_sum(y, x, ay, ax);
  LinkDiagram u = disjoint_union(x, y);
  int by = ay + x.num_arcs();
  auto xs = u.crossings();
  ArcEnd tx = u.tail(ax), ty = u.tail(by);
  xs[static_cast<size_t>(tx.crossing)].arcs[static_cast<size_t>(tx.slot)] = by;
  xs[static_cast<size_t>(ty.crossing)].arcs[static_cast<size_t>(ty.slot)] = ax;
  return LinkDiagram(std::move(xs), u.free_loops());
}

}  // namespace kribbon
