#include "kribbon/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "kribbon/mp.hpp"
#include "kribbon/ribbon.hpp"
#include "kribbon/seifert.hpp"

namespace kribbon {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = {
      {"seifert-graph", "seifert-graph-shape", "G_S(D) is bipartite with c edges, s vertices and c - s + 2 faces"},
      {"properness", "properness-equivalence",
       "proper faces <=> good spanning tree for every face <=> no maximal 2-cut set, matching brute-force deletion"},
      {"mfw", "mfw-inequality", "e >= -s - w + 1 and E <= s - w - 1 on D"},
      {"positive-extreme", "positive-diagram-extreme-degree", "E = s - c - 1 and p0h = z^(c-s+1) for positive D"},
      {"sum-identities", "connected-sum-multiplicativity", "H(D # T) = H(D) H(T), H(D u T) = delta H(D) H(T)"},
      {"mid-lowest", "mid-diagram-lowest-degree", "e = s - 3c - 1 and p0l = (-z)^(s-c-1) on the 2c-crossing diagram"},
      {"double-input", "double-input-conditions", "the double is built exactly for special alternating, nesting-free, flype-normal input"},
      {"double-structure", "double-structure",
       "s = 2c + 2, 4c edges, w = 0, c medium and c - s + 2 small circles, |C| = c, flipping C splits"},
      {"double-extremes", "double-extreme-degrees",
       "E = 2s - 1, p0h = z^(2c-2s+1), e = 2s - 2c - 3, p0l = -z^(2s-3) on the untwisted double"},
      {"mp-negative", "certified-negative-reductions", "c - s + 1 replayable reductions outside C from every start face"},
      {"mp-negative-smoothed", "smoothed-negative-reductions", "c - s + 2 replayable reductions after smoothing any crossing of C"},
      {"mp-positive", "certified-positive-reductions",
       "s - 1 replayable positive reductions for every face admitting a spanning tree off its boundary"},
      {"reduction-bound", "mfw-with-reductions", "MFW with the certified reduction counts holds and is tight on the double"},
      {"mp-search", "reduction-count-search", "exact r+ and r- are at least the certified lengths"},
      {"twisted-structure", "twisted-double-structure", "4c + 2|k| edges, w = 2k, |C| = c"},
      {"linking", "twist-linking-relation", "Lk = k - w(D)"},
      {"twisted-extremes", "twisted-double-case-table", "E, e, p0h, p0l of the k-twisted double follow the case table"},
      {"braid-bound", "braid-index-lower-bound", "MFW bound of the k-twisted double equals c + 2 + rho_k"},
  };
  return reg;
}

int VerificationReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& r) { return r.status == s; }));
}

int VerificationReport::exit_code() const {
  if (count(CheckStatus::Fail) > 0) return 1;
  if (count(CheckStatus::Skipped) > 0) return 2;
  return 0;
}

std::string VerificationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : checks) {
    nlohmann::ordered_json c;
    c["entry"] = r.entry;
    c["check"] = r.check;
    c["anchor"] = r.anchor;
    if (r.has_k) c["k"] = r.k;
    c["status"] = to_string(r.status);
    c["computed"] = r.computed;
    c["predicted"] = r.predicted;
    c["detail"] = r.detail;
    if (!r.polynomials.empty()) c["polynomials"] = r.polynomials;
    if (with_timing) {
      c["seconds"] = r.seconds;
      c["skein_nodes"] = r.nodes;
      c["cache_hits"] = r.hits;
    }
    arr.push_back(std::move(c));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"skipped", count(CheckStatus::Skipped)},
                  {"exit_code", exit_code()}};
  return j.dump(2);
}

std::string VerificationReport::to_tsv(bool with_timing) const {
  std::ostringstream os;
  os << "entry\tcheck\tanchor\tk\tstatus\tcomputed\tpredicted\tdetail";
  if (with_timing) os << "\tseconds";
  os << '\n';
  for (const auto& r : checks) {
    os << r.entry << '\t' << r.check << '\t' << r.anchor << '\t' << (r.has_k ? std::to_string(r.k) : "") << '\t'
       << to_string(r.status) << '\t' << r.computed << '\t' << r.predicted << '\t' << r.detail;
    if (with_timing) os << '\t' << r.seconds;
    os << '\n';
  }
  return os.str();
}

namespace {

const CheckSpec& spec_of(const std::string& id) {
  for (const auto& s : check_registry())
    if (id == s.id) return s;
  throw std::invalid_argument("unknown check: " + id);
}

int diagram_sign(const LinkDiagram& d) {
  if (d.num_crossings() == 0) return 0;
  int s = d.crossing(0).sign;
  for (const auto& c : d.crossings())
    if (c.sign != s) return 0;
  return s;
}

std::string mono(const ZMonomial& m) { return m.to_string(); }

std::string degrees(const BoundsReport& b) {
  return "E=" + std::to_string(b.E) + " e=" + std::to_string(b.e) + " p0h=" + mono(b.p0h) + " p0l=" + mono(b.p0l);
}

// Independent oracle: delete the boundary of each face and test connectivity
// by depth-first search.
bool brute_force_proper(const SeifertGraph& g) {
  for (const auto& face : g.faces) {
    std::vector<char> gone(static_cast<size_t>(g.num_edges()), 0);
    for (int e : face) gone[static_cast<size_t>(e)] = 1;
    std::vector<char> seen(static_cast<size_t>(g.num_vertices), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges) {
        if (gone[static_cast<size_t>(e.crossing)]) continue;
        int w = e.u == v ? e.v : e.v == v ? e.u : -1;
        if (w >= 0 && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != g.num_vertices) return false;
  }
  return true;
}

class Runner {
 public:
  Runner(const CatalogEntry& entry, const VerifyConfig& cfg, HomflyEngine& engine)
      : entry_(entry), cfg_(cfg), engine_(engine) {}

  VerificationReport run();

 private:
  bool selected(const std::string& id) const {
    return cfg_.checks.empty() || std::find(cfg_.checks.begin(), cfg_.checks.end(), id) != cfg_.checks.end();
  }
  void add(const std::string& id, std::optional<int> k, const std::function<void(CheckResult&)>& body);
  bool double_allowed(int crossings, std::string& why) const;
  const DoubleDiagram& untwisted();

  const CatalogEntry& entry_;
  const VerifyConfig& cfg_;
  HomflyEngine& engine_;
  VerificationReport report_;
  std::optional<DoubleDiagram> dd0_;
};

struct Skip {
  std::string why;
};

void Runner::add(const std::string& id, std::optional<int> k, const std::function<void(CheckResult&)>& body) {
  if (!selected(id)) return;
  CheckResult r;
  r.entry = entry_.name;
  r.check = id;
  r.anchor = spec_of(id).anchor;
  if (k) {
    r.k = *k;
    r.has_k = true;
  }
  auto before = engine_.stats();
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Skip& s) {
    r.status = CheckStatus::Skipped;
    r.detail = s.why;
  } catch (const BudgetExceeded& e) {
    r.status = CheckStatus::Skipped;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto after = engine_.stats();
  r.nodes = static_cast<std::uint64_t>(after.nodes - before.nodes);
  r.hits = static_cast<std::uint64_t>(after.cache_hits - before.cache_hits);
  report_.checks.push_back(std::move(r));
}

bool Runner::double_allowed(int crossings, std::string& why) const {
  if (cfg_.extended) {
    if (crossings <= cfg_.extended_crossing_cap) return true;
    why = "double has " + std::to_string(crossings) + " crossings, above the extended cap";
    return false;
  }
  if (entry_.pd.num_crossings() <= cfg_.default_max_c && crossings <= cfg_.homfly.crossing_cap) return true;
  why = "double has " + std::to_string(crossings) + " crossings; run with --extended";
  return false;
}

const DoubleDiagram& Runner::untwisted() {
  if (!dd0_) dd0_ = double_diagram(entry_.pd, 0);
  return *dd0_;
}

VerificationReport Runner::run() {
  const LinkDiagram& D = entry_.pd;
  const int c = D.num_crossings();
  const auto dec = decompose(D);
  const int s = dec.size();
  const int w = writhe(D);
  const int sign = diagram_sign(D);
  const auto g = seifert_graph(D, dec);

  add("seifert-graph", std::nullopt, [&](CheckResult& r) {
    PlaneGraph pg{g.num_vertices, {}, {}};
    for (const auto& e : g.edges) pg.edges.emplace_back(e.u, e.v);
    bool bip = !bipartition(pg).empty();
    int faces = static_cast<int>(g.faces.size());
    r.computed = "bipartite=" + std::to_string(bip) + " E=" + std::to_string(g.num_edges()) + " V=" +
                 std::to_string(g.num_vertices) + " F=" + std::to_string(faces);
    r.predicted = "bipartite=1 E=" + std::to_string(c) + " V=" + std::to_string(s) + " F=" + std::to_string(c - s + 2);
    r.status = r.computed == r.predicted ? CheckStatus::Pass : CheckStatus::Fail;
  });

  add("properness", std::nullopt, [&](CheckResult& r) {
    bool a = is_proper(g).proper;
    bool b = true;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) b = b && good_spanning_tree(g, f).has_value();
    bool cset = maximal_2cut_sets(g).empty();
    bool oracle = brute_force_proper(g);
    r.computed = "faces=" + std::to_string(a) + " trees=" + std::to_string(b) + " no-2cut=" + std::to_string(cset);
    r.predicted = "all equal to brute force " + std::to_string(oracle);
    r.status = a == oracle && b == oracle && cset == oracle ? CheckStatus::Pass : CheckStatus::Fail;
  });

  std::optional<Laurent> hD;
  auto H = [&]() -> const Laurent& {
    if (!hD) hD = engine_.compute(D);
    return *hD;
  };

  add("mfw", std::nullopt, [&](CheckResult& r) {
    auto out = mfw_check(D, H());
    r.computed = degrees(bounds(H()));
    r.detail = out.detail;
    r.status = out.pass ? CheckStatus::Pass : CheckStatus::Fail;
    if (!out.pass) r.polynomials = {H().to_json()};
  });

  add("positive-extreme", std::nullopt, [&](CheckResult& r) {
    if (sign == 0) throw Skip{"diagram has crossings of both signs"};
    auto out = sign > 0 ? positive_diagram_check(D, H()) : positive_diagram_check(mirror(D), mirror_substitute(H()));
    r.computed = degrees(bounds(H()));
    r.detail = out.detail;
    r.status = out.pass ? CheckStatus::Pass : CheckStatus::Fail;
    if (!out.pass) r.polynomials = {H().to_json()};
  });

  add("sum-identities", std::nullopt, [&](CheckResult& r) {
    auto out = sum_identities(engine_, D, gen_torus(3).pd);
    r.detail = out.detail;
    r.status = out.pass ? CheckStatus::Pass : CheckStatus::Fail;
  });

  const bool ok_input = sign != 0 && is_special_alternating(D) && nesting_free(D, dec) && flype_normalized(D, dec);

  add("mid-lowest", std::nullopt, [&](CheckResult& r) {
    if (!ok_input) throw Skip{"not a special alternating, nesting-free, flype-normal diagram"};
    if (!cfg_.extended && c > 6) throw Skip{"mid diagram of a " + std::to_string(c) + "-crossing knot; run with --extended"};
    LinkDiagram P = sign > 0 ? D : mirror(D);
    LinkDiagram mid = mid_diagram(P);
    Laurent h = engine_.compute(mid);
    auto b = bounds(h);
    ZMonomial want{(s - c - 1) % 2 == 0 ? Integer(1) : Integer(-1), s - c - 1};
    r.computed = "e=" + std::to_string(b.e) + " p0l=" + mono(b.p0l);
    r.predicted = "e=" + std::to_string(s - 3 * c - 1) + " p0l=" + mono(want);
    r.status = r.computed == r.predicted ? CheckStatus::Pass : CheckStatus::Fail;
    if (r.status == CheckStatus::Fail) r.polynomials = {h.to_json()};
  });

  add("double-input", std::nullopt, [&](CheckResult& r) {
    r.predicted = ok_input ? "built" : "rejected";
    try {
      (void)double_diagram(D, 0);
      r.computed = "built";
    } catch (const RibbonError& e) {
      r.computed = "rejected";
      r.detail = e.what();
    }
    r.status = r.computed == r.predicted ? CheckStatus::Pass : CheckStatus::Fail;
  });
  if (!ok_input) return std::move(report_);

  add("double-structure", std::nullopt, [&](CheckResult& r) {
    const auto& dd = untwisted();
    bool all = true;
    std::string comp, pred;
    for (const auto& cc : structural_counts(dd)) {
      all = all && cc.pass();
      comp += cc.name + "=" + std::to_string(cc.actual) + " ";
      pred += cc.name + "=" + std::to_string(cc.expected) + " ";
    }
    bool split = flipped_C_splits(dd);
    r.computed = comp + "split=" + std::to_string(split);
    r.predicted = pred + "split=1";
    r.status = all && split ? CheckStatus::Pass : CheckStatus::Fail;
  });

  std::optional<Laurent> hDD;
  auto HDD = [&]() -> const Laurent& {
    if (!hDD) {
      std::string why;
      if (!double_allowed(4 * c, why)) throw Skip{why};
      hDD = engine_.compute(untwisted().diagram);
    }
    return *hDD;
  };

  add("double-extremes", std::nullopt, [&](CheckResult& r) {
    Laurent h = sign > 0 ? HDD() : mirror_substitute(HDD());
    auto b = bounds(h);
    BoundsReport want;
    want.E = 2 * s - 1;
    want.p0h = {1, 2 * c - 2 * s + 1};
    want.e = 2 * s - 2 * c - 3;
    want.p0l = {-1, 2 * s - 3};
    r.computed = degrees(b);
    r.predicted = degrees(want);
    if (sign < 0) r.detail = "compared on the mirror";
    r.status = r.computed == r.predicted ? CheckStatus::Pass : CheckStatus::Fail;
    if (r.status == CheckStatus::Fail) r.polynomials = {HDD().to_json()};
  });

  // Reductions on crossings of sign -sign(D) come from the negative walk.
  int walk_len = -1, tree_len = -1;
  add("mp-negative", std::nullopt, [&](CheckResult& r) {
    const auto& dd = untwisted();
    const int beta = c - s + 1;
    std::string ok_faces, bad_faces;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
      std::string why;
      bool good = false;
      try {
        auto seq = certified_negative_sequence(dd, f);
        good = replay(seq, &why) && static_cast<int>(seq.steps.size()) == beta;
        if (good) walk_len = beta;
      } catch (const MPError& e) {
        why = e.what();
      }
      (good ? ok_faces : bad_faces) += " " + std::to_string(f);
    }
    r.computed = "length " + std::to_string(walk_len) + " from faces" + ok_faces;
    r.predicted = "length " + std::to_string(beta) + " from every face";
    if (!bad_faces.empty()) r.detail = "no certificate from faces" + bad_faces;
    r.status = bad_faces.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  });

  add("mp-negative-smoothed", std::nullopt, [&](CheckResult& r) {
    const auto& dd = untwisted();
    const int want = c - s + 2;
    std::string bad, searched;
    int good = 0;
    for (int x : dd.C_set) {
      std::string why;
      bool ok = false;
      try {
        auto seq = certified_negative_sequence(dd, -1, x);
        ok = replay(seq, &why) && static_cast<int>(seq.steps.size()) == want;
      } catch (const MPError&) {
      }
      if (ok) {
        ++good;
        continue;
      }
      if (cfg_.extended || c <= 6) {
        std::vector<Removal> how(static_cast<size_t>(dd.diagram.num_crossings()), Removal::Keep);
        how[static_cast<size_t>(x)] = Removal::Smooth;
        auto sm = remove_crossings(dd.diagram, how);
        auto ex = sign > 0 ? r_minus(sm, cfg_.mp_budget) : r_plus(sm, cfg_.mp_budget);
        if (ex.value >= want) {
          ++good;
          searched += " " + std::to_string(x);
          continue;
        }
        bad += " " + std::to_string(x) + "(exhaustive " + std::to_string(ex.value) + (ex.exact ? "" : "+") + ")";
      } else {
        bad += " " + std::to_string(x);
      }
    }
    r.computed = std::to_string(good) + "/" + std::to_string(dd.C_set.size()) + " crossings of C reach " + std::to_string(want);
    r.predicted = "all " + std::to_string(dd.C_set.size());
    if (!searched.empty()) r.detail = "found by exhaustive search only:" + searched + "; ";
    if (!bad.empty()) r.detail += "short:" + bad;
    r.status = bad.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  });

  add("mp-positive", std::nullopt, [&](CheckResult& r) {
    const auto& dd = untwisted();
    bool ok = true;
    std::string detail, faces;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
      if (!good_spanning_tree(g, f)) continue;
      faces += " " + std::to_string(f);
      for (int mask : {0, 3}) {
        std::vector<int> keep(dd.junctions.size(), mask);
        std::string why;
        try {
          auto seq = certified_positive_sequence(dd, keep, f);
          bool rep = replay(seq, &why) && static_cast<int>(seq.steps.size()) == s - 1;
          ok = ok && rep;
          if (!rep) detail += "face " + std::to_string(f) + ": " + why + "; ";
          else if (mask == 3) tree_len = s - 1;
        } catch (const MPError& e) {
          ok = false;
          detail += "face " + std::to_string(f) + ": " + e.what() + "; ";
        }
      }
    }
    if (faces.empty()) throw Skip{"no face admits a spanning tree off its boundary"};
    r.computed = "length " + std::to_string(tree_len) + " on faces" + faces;
    r.predicted = "length " + std::to_string(s - 1);
    r.detail = detail;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  });

  add("reduction-bound", std::nullopt, [&](CheckResult& r) {
    if (walk_len < 0 || tree_len < 0) throw Skip{"certified sequences unavailable"};
    int rp = sign > 0 ? tree_len : walk_len;
    int rm = sign > 0 ? walk_len : tree_len;
    const auto& dd = untwisted();
    auto out = reduction_bound_check(dd.diagram, HDD(), rp, rm);
    auto b = bounds(HDD());
    int S = dd.dec.size(), W = writhe(dd.diagram);
    bool tight = b.E == S - W - 1 - 2 * rm && b.e == -S - W + 1 + 2 * rp;
    r.computed = "E=" + std::to_string(b.E) + " e=" + std::to_string(b.e) + " r+>=" + std::to_string(rp) +
                 " r->=" + std::to_string(rm);
    r.predicted = "E<=" + std::to_string(S - W - 1 - 2 * rm) + " e>=" + std::to_string(-S - W + 1 + 2 * rp);
    r.detail = out.detail + (tight ? "; tight" : "; not tight");
    r.status = out.pass && tight ? CheckStatus::Pass : CheckStatus::Fail;
  });

  add("mp-search", std::nullopt, [&](CheckResult& r) {
    if (!cfg_.extended && c > cfg_.default_max_c) throw Skip{"exhaustive search; run with --extended"};
    const auto& dd = untwisted();
    auto rp = r_plus(dd.diagram, cfg_.mp_budget);
    auto rm = r_minus(dd.diagram, cfg_.mp_budget);
    int want_p = sign > 0 ? tree_len : walk_len;
    int want_m = sign > 0 ? walk_len : tree_len;
    r.computed = "r+=" + std::to_string(rp.value) + (rp.exact ? "" : "(partial)") + " r-=" + std::to_string(rm.value) +
                 (rm.exact ? "" : "(partial)");
    r.predicted = "r+>=" + std::to_string(want_p) + " r->=" + std::to_string(want_m);
    bool ge = rp.value >= want_p && rm.value >= want_m;
    if (ge) r.status = CheckStatus::Pass;
    else if (!rp.exact || !rm.exact) throw Skip{"search budget exhausted below the certified lengths"};
    else r.status = CheckStatus::Fail;
  });

  for (int k = cfg_.k_lo; k <= cfg_.k_hi; ++k) {
    std::optional<DoubleDiagram> ddk;
    auto DK = [&]() -> const DoubleDiagram& {
      if (!ddk) ddk = double_diagram(D, k);
      return *ddk;
    };
    add("twisted-structure", k, [&](CheckResult& r) {
      bool all = true;
      for (const auto& cc : structural_counts(DK())) {
        if (cc.name == "linking") continue;
        all = all && cc.pass();
        r.computed += cc.name + "=" + std::to_string(cc.actual) + " ";
        r.predicted += cc.name + "=" + std::to_string(cc.expected) + " ";
      }
      r.status = all ? CheckStatus::Pass : CheckStatus::Fail;
    });
    add("linking", k, [&](CheckResult& r) {
      int lk = linking_number(DK().diagram);
      r.computed = std::to_string(lk);
      r.predicted = std::to_string(k - w);
      r.status = lk == k - w ? CheckStatus::Pass : CheckStatus::Fail;
    });
    std::optional<Laurent> hk;
    auto HK = [&]() -> const Laurent& {
      if (!hk) {
        std::string why;
        int n = 4 * c + 2 * std::abs(k);
        if (!double_allowed(n, why)) throw Skip{why};
        hk = engine_.compute(DK().diagram);
      }
      return *hk;
    };
    add("twisted-extremes", k, [&](CheckResult& r) {
      auto b = bounds(HK());
      auto p = predict_bounds(D, k);
      r.computed = degrees(b);
      r.predicted = degrees(p);
      r.status = r.computed == r.predicted ? CheckStatus::Pass : CheckStatus::Fail;
      if (r.status == CheckStatus::Fail) r.polynomials = {HK().to_json()};
    });
    add("braid-bound", k, [&](CheckResult& r) {
      int xi = bounds(HK()).xi;
      int want = braid_index_bound(D, k);
      r.computed = "xi=" + std::to_string(xi);
      r.predicted = "xi=" + std::to_string(want);
      r.status = xi == want ? CheckStatus::Pass : CheckStatus::Fail;
    });
  }
  return std::move(report_);
}

}  // namespace

VerificationReport verify(const CatalogEntry& entry, const VerifyConfig& cfg, HomflyEngine& engine) {
  for (const auto& id : cfg.checks) spec_of(id);
  return Runner(entry, cfg, engine).run();
}

VerificationReport verify_all(const std::vector<CatalogEntry>& entries, const VerifyConfig& cfg, HomflyEngine& engine) {
  std::vector<VerificationReport> parts(entries.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < entries.size();) parts[i] = verify(entries[i], cfg, engine);
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < std::max(1, cfg.threads); ++t) pool.emplace_back(worker);
  }
  VerificationReport out;
  for (auto& p : parts)
    for (auto& r : p.checks) out.checks.push_back(std::move(r));
  return out;
}

}  // namespace kribbon
