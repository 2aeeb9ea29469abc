#include "kribbon/homfly.hpp"

#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "kribbon/seifert.hpp"

namespace kribbon {

namespace {

struct Child {
  Integer coeff;
  int da = 0;
  int dz = 0;
  LinkDiagram diagram;
};

std::string hex_encode(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(s.size() * 2);
  for (unsigned char ch : s) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

std::string hex_decode(const std::string& s) {
  auto val = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    throw std::invalid_argument("bad hex digit in cache key");
  };
  if (s.size() % 2) throw std::invalid_argument("odd-length cache key");
  std::string out;
  for (size_t i = 0; i < s.size(); i += 2) out.push_back(static_cast<char>(val(s[i]) * 16 + val(s[i + 1])));
  return out;
}

}  // namespace

HomflyEngine::HomflyEngine(HomflyConfig cfg) : cfg_(cfg) {}

HomflyStats HomflyEngine::stats() const {
  std::shared_lock lock(mu_);
  return {nodes_.load(), hits_.load(), memo_.size()};
}

void HomflyEngine::count_node() {
  if (++nodes_ > cfg_.node_budget)
    throw BudgetExceeded("skein node budget exceeded", {nodes_.load(), hits_.load(), memo_.size()});
}

Laurent HomflyEngine::compute(const LinkDiagram& d) { return eval(d, true); }

Laurent HomflyEngine::eval(const LinkDiagram& input, bool top) {
  LinkDiagram d = simplify(input);
  if (d.num_crossings() == 0) return delta_power(std::max(0, d.free_loops() - 1));
  auto pieces = connected_pieces(d);
  if (pieces.size() == 1 && d.free_loops() == 0) return eval_piece(d, top);
  Laurent out = delta_power(static_cast<int>(pieces.size()) + d.free_loops() - 1);
  for (const auto& piece : pieces) out = out * eval_piece(sub_diagram(d, piece), top);
  return out;
}

Laurent HomflyEngine::eval_piece(const LinkDiagram& d, bool top) {
  if (d.num_crossings() > cfg_.crossing_cap)
    throw BudgetExceeded("crossing cap exceeded (" + std::to_string(d.num_crossings()) + " crossings)", stats());
  CanonicalForm cf = canonical_form(d);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(cf.key);
    if (it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  count_node();

  // Arcs of the canonical diagram are numbered along each component from its
  // base point, components in stacking order.
  const LinkDiagram& cd = cf.diagram;
  std::vector<char> met(static_cast<size_t>(cd.num_crossings()), 0);
  std::vector<int> violations;
  for (int a = 0; a < cd.num_arcs(); ++a) {
    ArcEnd h = cd.head(a);
    if (met[static_cast<size_t>(h.crossing)]) continue;
    met[static_cast<size_t>(h.crossing)] = 1;
    if (h.slot == 0) violations.push_back(h.crossing);
  }

  std::vector<Child> children;
  LinkDiagram cur = cd;
  int shift = 0;
  for (int x : violations) {
    int sign = cur.crossing(x).sign;
    // H+ = a^-2 H- + a^-1 z H0 ;  H- = a^2 H+ - a z H0
    children.push_back({Integer(sign > 0 ? 1 : -1), shift + (sign > 0 ? -1 : 1), 1, smooth_crossing(cur, x)});
    shift += sign > 0 ? -2 : 2;
    cur = switch_crossing(cur, x);
  }
  Laurent out = delta_power(cd.num_components() - 1).scaled(1, shift, 0);

  std::vector<Laurent> values(children.size());
  if (top && cfg_.threads > 1 && children.size() > 1) {
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      for (size_t i; (i = next++) < children.size();) {
        try {
          values[i] = eval(children[i].diagram, false);
        } catch (...) {
          std::lock_guard g(failure_mu);
          if (!failure) failure = std::current_exception();
          next = children.size();
        }
      }
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < cfg_.threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  } else {
    for (size_t i = 0; i < children.size(); ++i) values[i] = eval(children[i].diagram, false);
  }
  for (size_t i = 0; i < children.size(); ++i) out.add_scaled(values[i], children[i].coeff, children[i].da, children[i].dz);

  std::unique_lock lock(mu_);
  memo_.emplace(std::move(cf.key), out);
  return out;
}

std::size_t HomflyEngine::load_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return 0;
  std::unique_lock lock(mu_);
  std::size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    memo_.emplace(hex_decode(line.substr(0, tab)), Laurent::from_json(std::string_view(line).substr(tab + 1)));
    ++loaded;
  }
  return loaded;
}

void HomflyEngine::save_cache(const std::filesystem::path& file) const {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    std::shared_lock lock(mu_);
    for (const auto& [key, value] : memo_) out << hex_encode(key) << '\t' << value.to_json() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

Laurent homfly(const LinkDiagram& d) {
  HomflyEngine engine;
  return engine.compute(d);
}

std::string ZMonomial::to_string() const {
  std::ostringstream os;
  if (c == 0) return "0";
  if (z == 0) {
    os << c;
    return os.str();
  }
  if (c == -1) os << '-';
  else if (c != 1) os << c;
  os << 'z';
  if (z != 1) os << '^' << z;
  return os.str();
}

BoundsReport bounds(const Laurent& h) {
  if (h.is_zero()) throw std::domain_error("bounds of the zero polynomial");
  BoundsReport r;
  r.E = h.max_a();
  r.e = h.min_a();
  auto hi = h.a_coefficient(r.E);
  auto lo = h.a_coefficient(r.e);
  r.p0h = {hi.back().second, hi.back().first};
  r.p0l = {lo.back().second, lo.back().first};
  r.xi = (r.E - r.e) / 2 + 1;
  return r;
}

namespace {

std::string fmt(const char* label, long lhs, const char* op, long rhs) {
  std::ostringstream os;
  os << label << ": " << lhs << ' ' << op << ' ' << rhs;
  return os.str();
}

}  // namespace

CheckOutcome mfw_check(const LinkDiagram& d, const Laurent& h) { return reduction_bound_check(d, h, 0, 0); }

CheckOutcome reduction_bound_check(const LinkDiagram& d, const Laurent& h, int r_plus, int r_minus) {
  auto b = bounds(h);
  int s = decompose(d).size();
  int w = writhe(d);
  int hi = s - w - 1 - 2 * r_minus;
  int lo = -s - w + 1 + 2 * r_plus;
  CheckOutcome out;
  out.pass = b.E <= hi && b.e >= lo && s - r_plus - r_minus >= b.xi;
  out.detail = fmt("E", b.E, "<=", hi) + "; " + fmt("e", b.e, ">=", lo) + "; " + fmt("xi", b.xi, "<=", s - r_plus - r_minus);
  return out;
}

CheckOutcome positive_diagram_check(const LinkDiagram& d, const Laurent& h) {
  CheckOutcome out;
  for (const auto& c : d.crossings())
    if (c.sign < 0) {
      out.detail = "diagram has a negative crossing";
      return out;
    }
  auto b = bounds(h);
  int s = decompose(d).size();
  int c = d.num_crossings();
  ZMonomial want{1, c - s + 1};
  out.pass = b.E == s - c - 1 && b.p0h == want;
  out.detail = fmt("E", b.E, "==", s - c - 1) + "; p0h: " + b.p0h.to_string() + " == " + want.to_string();
  return out;
}

CheckOutcome sum_identities(HomflyEngine& engine, const LinkDiagram& k1, const LinkDiagram& k2) {
  Laurent h1 = engine.compute(k1), h2 = engine.compute(k2);
  Laurent hs = engine.compute(connected_sum(k1, k2));
  Laurent hu = engine.compute(disjoint_union(k1, k2));
  CheckOutcome out;
  bool sum_ok = hs == h1 * h2;
  bool union_ok = hu == delta() * h1 * h2;
  out.pass = sum_ok && union_ok;
  out.detail = std::string("connected sum ") + (sum_ok ? "ok" : "mismatch: " + hs.to_string()) + "; split union " +
               (union_ok ? "ok" : "mismatch: " + hu.to_string());
  return out;
}

}  // namespace kribbon
