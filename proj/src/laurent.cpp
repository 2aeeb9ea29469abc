#include "kribbon/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kribbon {

namespace {

bool term_less(const Laurent::Term& x, const Laurent::Term& y) {
  return x.a != y.a ? x.a < y.a : x.z < y.z;
}

std::vector<Laurent::Term> merge(const std::vector<Laurent::Term>& x, std::vector<Laurent::Term> y, bool subtract) {
  std::vector<Laurent::Term> out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && term_less(x[i], y[j]))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || term_less(y[j], x[i])) {
      auto t = std::move(y[j++]);
      if (subtract) t.c = -t.c;
      out.push_back(std::move(t));
    } else {
      Integer c = x[i].c;
      if (subtract) c -= y[j].c;
      else c += y[j].c;
      if (c != 0) out.push_back({x[i].a, x[i].z, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Laurent::Term> normalize(std::vector<Laurent::Term> ts) {
  std::sort(ts.begin(), ts.end(), term_less);
  std::vector<Laurent::Term> out;
  for (auto& t : ts) {
    if (!out.empty() && out.back().a == t.a && out.back().z == t.z) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  return out;
}

}  // namespace

Laurent::Laurent(long c) {
  if (c != 0) terms_.push_back({0, 0, Integer(c)});
}

Laurent Laurent::monomial(Integer c, int a, int z) {
  if (c == 0) return {};
  return Laurent(std::vector<Term>{{a, z, std::move(c)}});
}

Laurent& Laurent::operator+=(const Laurent& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Laurent operator*(const Laurent& x, const Laurent& y) {
  std::vector<Laurent::Term> ts;
  ts.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_)
    for (const auto& t : y.terms_) ts.push_back({s.a + t.a, s.z + t.z, s.c * t.c});
  return Laurent(normalize(std::move(ts)));
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

Laurent Laurent::scaled(const Integer& c, int da, int dz) const {
  if (c == 0) return {};
  Laurent out = *this;
  for (auto& t : out.terms_) {
    t.a += da;
    t.z += dz;
    t.c *= c;
  }
  return out;
}

void Laurent::add_scaled(const Laurent& x, const Integer& c, int da, int dz) {
  if (c == 0 || x.is_zero()) return;
  terms_ = merge(terms_, x.scaled(c, da, dz).terms_, false);
}

int Laurent::max_a() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.back().a;
}

int Laurent::min_a() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.front().a;
}

std::vector<std::pair<int, Integer>> Laurent::a_coefficient(int e) const {
  std::vector<std::pair<int, Integer>> out;
  for (const auto& t : terms_)
    if (t.a == e) out.emplace_back(t.z, t.c);
  return out;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = t.c < 0 ? Integer(-t.c) : t.c;
    if (first) {
      if (t.c < 0) os << '-';
    } else {
      os << (t.c < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = t.a == 0 && t.z == 0;
    if (mag != 1 || bare) os << mag;
    auto var = [&](char v, int e, bool lead) {
      if (e == 0) return;
      if (!lead) os << '*';
      os << v;
      if (e != 1) os << '^' << e;
    };
    bool lead = mag == 1;
    if (t.a != 0) {
      var('a', t.a, lead);
      lead = false;
    }
    var('z', t.z, lead);
  }
  return os.str();
}

std::string Laurent::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& t : terms_) arr.push_back({t.a, t.z, t.c.str()});
  return arr.dump();
}

Laurent Laurent::from_json(std::string_view text) {
  auto arr = nlohmann::json::parse(text);
  std::vector<Term> ts;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 3) throw std::invalid_argument("polynomial term must be [a, z, \"c\"]");
    ts.push_back({item[0].get<int>(), item[1].get<int>(), Integer(item[2].get<std::string>())});
  }
  return Laurent(normalize(std::move(ts)));
}

Laurent delta() { return Laurent::monomial(1, 1, -1) - Laurent::monomial(1, -1, -1); }

Laurent delta_power(int n) {
  Laurent out = 1;
  Laurent d = delta();
  for (int i = 0; i < n; ++i) out = out * d;
  return out;
}

Laurent mirror_substitute(const Laurent& p) {
  Laurent out;
  for (const auto& t : p.terms()) out += Laurent::monomial((t.a % 2 == 0) ? t.c : Integer(-t.c), -t.a, t.z);
  return out;
}

}  // namespace kribbon
