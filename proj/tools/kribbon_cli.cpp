#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kribbon/catalog.hpp"
#include "kribbon/homfly.hpp"
#include "kribbon/mp.hpp"
#include "kribbon/ribbon.hpp"
#include "kribbon/seifert.hpp"
#include "kribbon/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace kribbon;

namespace {

constexpr int kPass = 0, kFail = 1, kSkip = 2;
constexpr const char* kCacheEnv = "KRIBBON_CACHE_DIR";

struct Options {
  std::string format = "json";
  std::string cache;
  int threads = 1;
  std::int64_t budget = 0;
  std::string k_range;
  bool extended = false;
};

std::pair<int, int> parse_k_range(const std::string& text) {
  auto dots = text.find("..");
  auto num = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw CLI::ValidationError("--k-range", "expected a..b, got " + text);
    return v;
  };
  if (dots == std::string::npos) {
    int k = num(text);
    return {k, k};
  }
  int a = num(std::string_view(text).substr(0, dots)), b = num(std::string_view(text).substr(dots + 2));
  if (a > b) throw CLI::ValidationError("--k-range", "empty range " + text);
  return {a, b};
}

fs::path cache_file(const Options& o) {
  if (!o.cache.empty()) return o.cache;
  if (const char* dir = std::getenv(kCacheEnv); dir && *dir) return fs::path(dir) / "homfly.cache";
  return {};
}

HomflyConfig homfly_config(const Options& o) {
  HomflyConfig cfg;
  if (o.budget > 0) cfg.node_budget = o.budget;
  if (o.extended) cfg.crossing_cap = 40;
  cfg.threads = o.threads;
  return cfg;
}

struct Engine {
  explicit Engine(const Options& o) : engine(homfly_config(o)), path(cache_file(o)) {
    if (!path.empty() && fs::exists(path)) engine.load_cache(path);
  }
  ~Engine() {
    if (path.empty()) return;
    try {
      if (path.has_parent_path()) fs::create_directories(path.parent_path());
      engine.save_cache(path);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache not saved: " << e.what() << '\n';
    }
  }
  HomflyEngine engine;
  fs::path path;
};

// A catalog name, a PD file, or "-" for standard input.
std::vector<CatalogEntry> load_inputs(const std::vector<std::string>& specs) {
  std::vector<CatalogEntry> out;
  for (const auto& spec : specs) {
    if (const CatalogEntry* e = find_entry(spec)) {
      out.push_back(*e);
      continue;
    }
    bool found = false;
    for (auto& e : counter_fixtures())
      if (e.name == spec) {
        out.push_back(std::move(e));
        found = true;
      }
    if (found) continue;
    std::string text;
    if (spec == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(spec);
      if (!in) throw std::runtime_error("no catalog entry or readable file named " + spec);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    int idx = 0;
    for (auto& rec : parse_pd_file(text)) {
      CatalogEntry e;
      e.name = rec.name.empty() ? spec + "#" + std::to_string(idx) : rec.name;
      e.pd = std::move(rec.diagram);
      e.provenance = "file";
      e.c = e.pd.num_crossings();
      e.s = decompose(e.pd).size();
      e.w = writhe(e.pd);
      out.push_back(std::move(e));
      ++idx;
    }
  }
  return out;
}

ordered_json poly_json(const Laurent& h) { return ordered_json::parse(h.to_json()); }

ordered_json bounds_json(const BoundsReport& b) {
  return {{"E", b.E}, {"e", b.e}, {"p0h", b.p0h.to_string()}, {"p0l", b.p0l.to_string()}, {"xi", b.xi}};
}

void emit(const Options& o, const ordered_json& rows, const std::vector<std::string>& columns) {
  if (o.format == "json") {
    std::cout << rows.dump(2) << '\n';
    return;
  }
  for (size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "\t" : "") << columns[i];
  std::cout << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i) {
      const auto& v = row.contains(columns[i]) ? row[columns[i]] : ordered_json();
      std::cout << (i ? "\t" : "") << (v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump());
    }
    std::cout << '\n';
  }
}

int cmd_homfly(const Options& o, const std::vector<std::string>& inputs) {
  Engine eng(o);
  ordered_json rows = ordered_json::array();
  int code = kPass;
  for (const auto& e : load_inputs(inputs)) {
    ordered_json row{{"name", e.name}, {"crossings", e.pd.num_crossings()}};
    try {
      Laurent h = eng.engine.compute(e.pd);
      row["homfly"] = h.to_string();
      row["terms"] = poly_json(h);
    } catch (const BudgetExceeded& ex) {
      row["error"] = ex.what();
      code = kSkip;
    }
    auto st = eng.engine.stats();
    row["skein_nodes"] = st.nodes;
    row["cache_hits"] = st.cache_hits;
    rows.push_back(std::move(row));
  }
  emit(o, rows, {"name", "crossings", "homfly", "error"});
  return code;
}

int cmd_bounds(const Options& o, const std::vector<std::string>& inputs) {
  Engine eng(o);
  ordered_json rows = ordered_json::array();
  int code = kPass;
  for (const auto& e : load_inputs(inputs)) {
    auto dec = decompose(e.pd);
    ordered_json row{{"name", e.name}, {"c", e.pd.num_crossings()}, {"s", dec.size()}, {"w", writhe(e.pd)}};
    try {
      Laurent h = eng.engine.compute(e.pd);
      row.update(bounds_json(bounds(h)));
      auto mfw = mfw_check(e.pd, h);
      row["mfw"] = mfw.pass ? "PASS" : "FAIL";
      if (!mfw.pass) code = kFail;
    } catch (const BudgetExceeded& ex) {
      row["error"] = ex.what();
      if (code == kPass) code = kSkip;
    }
    rows.push_back(std::move(row));
  }
  emit(o, rows, {"name", "c", "s", "w", "E", "e", "p0h", "p0l", "xi", "mfw", "error"});
  return code;
}

int cmd_double(const Options& o, const std::vector<std::string>& inputs, std::optional<int> k, const std::string& mode) {
  auto [lo, hi] = k ? std::pair{*k, *k} : o.k_range.empty() ? std::pair{0, 0} : parse_k_range(o.k_range);
  if (mode == "pd") {
    for (const auto& e : load_inputs(inputs))
      for (int kk = lo; kk <= hi; ++kk)
        std::cout << to_pd(double_diagram(e.pd, kk).diagram, e.name + "-double-k" + std::to_string(kk));
    return kPass;
  }
  ordered_json rows = ordered_json::array();
  int code = kPass;
  for (const auto& e : load_inputs(inputs))
    for (int kk = lo; kk <= hi; ++kk) {
      auto dd = double_diagram(e.pd, kk);
      ordered_json row{{"name", e.name}, {"k", kk}, {"crossings", dd.diagram.num_crossings()},
                       {"circles", dd.dec.size()}, {"writhe", writhe(dd.diagram)},
                       {"linking", linking_number(dd.diagram)}, {"C", dd.C_set}};
      ordered_json counts = ordered_json::object();
      for (const auto& c : structural_counts(dd)) {
        counts[c.name] = {{"actual", c.actual}, {"expected", c.expected}};
        if (!c.pass()) code = kFail;
      }
      row["counts"] = std::move(counts);
      row["predicted"] = bounds_json(predict_bounds(e.pd, kk));
      row["braid_index_bound"] = braid_index_bound(e.pd, kk);
      row["pd"] = to_pd(dd.diagram, e.name);
      rows.push_back(std::move(row));
    }
  emit(o, rows, {"name", "k", "crossings", "circles", "writhe", "linking", "braid_index_bound"});
  return code;
}

int cmd_mp(const Options& o, const std::vector<std::string>& inputs, bool plus, bool minus, std::int64_t budget) {
  if (!plus && !minus) plus = minus = true;
  if (budget <= 0) budget = o.budget > 0 ? o.budget : 200'000;
  ordered_json rows = ordered_json::array();
  int code = kPass;
  for (const auto& e : load_inputs(inputs)) {
    ordered_json row{{"name", e.name}, {"s", decompose(e.pd).size()}};
    auto put = [&](const char* key, const RSearch& r) {
      row[key] = r.value;
      row[std::string(key) + "_exact"] = r.exact;
      row[std::string(key) + "_states"] = r.states;
      if (!r.exact) code = kSkip;
    };
    if (plus) put("r_plus", r_plus(e.pd, budget));
    if (minus) put("r_minus", r_minus(e.pd, budget));
    rows.push_back(std::move(row));
  }
  emit(o, rows, {"name", "s", "r_plus", "r_plus_exact", "r_minus", "r_minus_exact"});
  return code;
}

int cmd_verify(const Options& o, const std::vector<std::string>& inputs, const std::vector<std::string>& checks,
               bool timing) {
  VerifyConfig cfg;
  cfg.checks = checks;
  cfg.extended = o.extended;
  cfg.threads = o.threads;
  cfg.homfly = homfly_config(o);
  if (o.budget > 0) cfg.mp_budget = o.budget;
  if (!o.k_range.empty()) std::tie(cfg.k_lo, cfg.k_hi) = parse_k_range(o.k_range);
  std::vector<CatalogEntry> entries;
  if (inputs.empty()) {
    entries = builtin_catalog();
    for (auto& e : counter_fixtures()) entries.push_back(std::move(e));
  } else {
    entries = load_inputs(inputs);
  }
  Engine eng(o);
  auto report = verify_all(entries, cfg, eng.engine);
  std::cout << (o.format == "json" ? report.to_json(timing) + "\n" : report.to_tsv(timing));
  return report.exit_code();
}

int cmd_catalog_list(const Options& o) {
  ordered_json rows = ordered_json::array();
  auto add = [&](const CatalogEntry& e) {
    auto g = seifert_graph(e.pd);
    rows.push_back({{"name", e.name}, {"provenance", e.provenance}, {"c", e.c}, {"s", e.s}, {"w", e.w},
                    {"proper", is_proper(g).proper}, {"counter_fixture", e.counter_fixture}});
  };
  for (const auto& e : builtin_catalog()) add(e);
  for (const auto& e : counter_fixtures()) add(e);
  emit(o, rows, {"name", "provenance", "c", "s", "w", "proper", "counter_fixture"});
  return kPass;
}

int cmd_catalog_emit(const Options& o, const std::vector<std::string>& names) {
  std::vector<CatalogEntry> entries;
  if (names.empty()) {
    entries = builtin_catalog();
  } else {
    entries = load_inputs(names);
  }
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) arr.push_back(ordered_json::parse(entry_json(e)));
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& e : entries) std::cout << to_pd(e.pd, e.name);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert graphs, HOMFLY-PT polynomials, MP reductions and ribbon doubles of knot diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cache", o.cache, std::string("HOMFLY cache file (default $") + kCacheEnv + "/homfly.cache)");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", o.budget, "Skein node budget; also the MP search state budget");
  app.add_option("--k-range", o.k_range, "Twist range a..b");
  app.add_flag("--extended", o.extended, "Lift the default crossing caps for doubles");

  std::vector<std::string> inputs;
  auto* homfly = app.add_subcommand("homfly", "HOMFLY-PT polynomial of each input diagram");
  homfly->add_option("inputs", inputs, "Catalog names, PD files or -")->required();

  auto* bnd = app.add_subcommand("bounds", "Extreme a-degrees, leading z-monomials and the MFW check");
  bnd->add_option("inputs", inputs, "Catalog names, PD files or -")->required();

  std::optional<int> k;
  std::string emit_mode = "json";
  auto* dbl = app.add_subcommand("double", "Ribbon double with k full twists");
  dbl->add_option("inputs", inputs, "Catalog names, PD files or -")->required();
  dbl->add_option("-k", k, "Twist count (overrides --k-range)");
  dbl->add_option("--emit", emit_mode, "pd or json")->check(CLI::IsMember({"pd", "json"}));

  bool rp = false, rm = false;
  std::int64_t mp_budget = 0;
  auto* mp = app.add_subcommand("mp", "Exact MP reduction counts");
  mp->add_option("inputs", inputs, "Catalog names, PD files or -")->required();
  mp->add_flag("--r-plus", rp, "Positive lone crossings");
  mp->add_flag("--r-minus", rm, "Negative lone crossings");
  mp->add_option("--budget", mp_budget, "Search state budget");

  std::vector<std::string> checks;
  bool timing = true;
  auto* ver = app.add_subcommand("verify", "Run the check registry over catalog entries (all by default)");
  ver->add_option("inputs", inputs, "Catalog names, PD files or -");
  ver->add_option("--check", checks, "Restrict to these check ids (repeatable)");
  ver->add_flag("!--no-timing", timing, "Omit runtimes and cache statistics");
  auto* list_checks = ver->add_flag("--list-checks", "Print the check registry and exit");

  auto* cat = app.add_subcommand("catalog", "Built-in catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  std::vector<std::string> names;
  auto* cat_emit = cat->add_subcommand("emit", "Emit entries as PD records (tsv) or JSON");
  cat_emit->add_option("names", names, "Entries (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kFail;
  }

  try {
    if (homfly->parsed()) return cmd_homfly(o, inputs);
    if (bnd->parsed()) return cmd_bounds(o, inputs);
    if (dbl->parsed()) return cmd_double(o, inputs, k, emit_mode);
    if (mp->parsed()) return cmd_mp(o, inputs, rp, rm, mp_budget);
    if (ver->parsed()) {
      if (*list_checks) {
        ordered_json rows = ordered_json::array();
        for (const auto& c : check_registry()) rows.push_back({{"id", c.id}, {"anchor", c.anchor}, {"statement", c.statement}});
        emit(o, rows, {"id", "anchor", "statement"});
        return kPass;
      }
      return cmd_verify(o, inputs, checks, timing);
    }
    if (cat_list->parsed()) return cmd_catalog_list(o);
    if (cat_emit->parsed()) return cmd_catalog_emit(o, names);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kSkip;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kFail;
}
