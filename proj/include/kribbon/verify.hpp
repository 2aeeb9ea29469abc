#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kribbon/catalog.hpp"
#include "kribbon/homfly.hpp"

namespace kribbon {

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

struct CheckSpec {
  const char* id;
  const char* anchor;  // the claim this check exercises
  const char* statement;
};
// Static coverage list; every CheckResult cites one of these.
const std::vector<CheckSpec>& check_registry();

struct CheckResult {
  std::string entry;
  std::string check;
  std::string anchor;
  int k = 0;
  bool has_k = false;
  CheckStatus status = CheckStatus::Pass;
  std::string computed;
  std::string predicted;
  std::string detail;
  std::vector<std::string> polynomials;  // filled on failure
  double seconds = 0;
  std::uint64_t nodes = 0;
  std::uint64_t hits = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  // 0 all pass, 1 any failure, 2 otherwise if anything was skipped.
  int exit_code() const;
  std::string to_json(bool with_timing = true) const;
  std::string to_tsv(bool with_timing = true) const;
};

struct VerifyConfig {
  std::vector<std::string> checks;  // empty = all
  int k_lo = 0;
  int k_hi = 0;
  bool extended = false;
  // Doubles are evaluated only for c(D) <= this unless extended.
  int default_max_c = 3;
  int extended_crossing_cap = 40;
  HomflyConfig homfly;  // the engine passed to verify should use these limits
  std::int64_t mp_budget = 200'000;
  int threads = 1;
};

VerificationReport verify(const CatalogEntry& entry, const VerifyConfig& cfg, HomflyEngine& engine);
VerificationReport verify_all(const std::vector<CatalogEntry>& entries, const VerifyConfig& cfg, HomflyEngine& engine);

}  // namespace kribbon
