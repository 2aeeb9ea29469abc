#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "kribbon/diagram.hpp"
#include "kribbon/laurent.hpp"

namespace kribbon {

struct HomflyConfig {
  std::int64_t node_budget = 100'000'000;
  int crossing_cap = 24;
  int threads = 1;
};

struct HomflyStats {
  std::int64_t nodes = 0;       // skein nodes expanded (memo misses)
  std::int64_t cache_hits = 0;
  std::size_t memo_size = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, HomflyStats s) : std::runtime_error(what), stats(s) {}
  HomflyStats stats;
};

/// Skein evaluator for H(D; a, z) with aH(D+) - a^-1 H(D-) = z H(D0) and
/// H(unknot) = 1.  Each node is simplified, split into pieces and looked up
/// by canonical key; unseen pieces are made descending by switching the
/// crossings first met from below, each switch spawning a smoothed child.
class HomflyEngine {
 public:
  explicit HomflyEngine(HomflyConfig cfg = {});

  Laurent compute(const LinkDiagram& d);

  HomflyStats stats() const;
  const HomflyConfig& config() const { return cfg_; }
  void set_config(const HomflyConfig& cfg) { cfg_ = cfg; }

  // Cache file: one "hexkey<TAB>json" line per entry.
  std::size_t load_cache(const std::filesystem::path& file);
  void save_cache(const std::filesystem::path& file) const;

 private:
  Laurent eval(const LinkDiagram& d, bool top);
  Laurent eval_piece(const LinkDiagram& d, bool top);
  void count_node();

  HomflyConfig cfg_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, Laurent> memo_;
  std::atomic<std::int64_t> nodes_{0}, hits_{0};
};

// Convenience wrapper around a fresh engine with default budgets.
Laurent homfly(const LinkDiagram& d);

// ---- degree data ---------------------------------------------------------------

struct ZMonomial {
  Integer c;
  int z = 0;
  bool operator==(const ZMonomial&) const = default;
  std::string to_string() const;
};

struct BoundsReport {
  int E = 0;
  int e = 0;
  ZMonomial p0h;
  ZMonomial p0l;
  int xi = 1;
};

BoundsReport bounds(const Laurent& h);

// ---- inequality and identity checks -----------------------------------------

struct CheckOutcome {
  bool pass = false;
  std::string detail;
};

// E <= s - w - 1, e >= -s - w + 1 and s >= xi.
CheckOutcome mfw_check(const LinkDiagram& d, const Laurent& h);
// Same with the MP corrections 2r- and 2r+.
CheckOutcome reduction_bound_check(const LinkDiagram& d, const Laurent& h, int r_plus, int r_minus);
// E = s - c - 1 and p0h = z^(c-s+1) for a positive diagram.
CheckOutcome positive_diagram_check(const LinkDiagram& d, const Laurent& h);
// H(K1 # K2) = H(K1) H(K2) and H(K1 u K2) = delta H(K1) H(K2).
CheckOutcome sum_identities(HomflyEngine& engine, const LinkDiagram& k1, const LinkDiagram& k2);

}  // namespace kribbon
