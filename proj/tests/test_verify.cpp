#include <set>

#include "doctest.h"
#include "json.hpp"
#include "kribbon/verify.hpp"

using namespace kribbon;

namespace {
VerificationReport run(const CatalogEntry& e, std::vector<std::string> checks, int k_lo = 0, int k_hi = 0) {
  VerifyConfig cfg;
  cfg.checks = std::move(checks);
  cfg.k_lo = k_lo;
  cfg.k_hi = k_hi;
  HomflyEngine eng(cfg.homfly);
  return verify(e, cfg, eng);
}
}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("registry is well formed") {
    std::set<std::string> ids;
    for (const auto& c : check_registry()) {
      CHECK(ids.insert(c.id).second);
      CHECK(std::string(c.anchor).size() > 0);
      CHECK(std::string(c.statement).size() > 0);
    }
    CHECK(ids.count("mfw") == 1);
    CHECK(ids.count("twisted-extremes") == 1);
  }

  TEST_CASE("trefoil passes every check") {
    auto rep = run(gen_torus(3), {}, -2, 2);
    CHECK(rep.count(CheckStatus::Fail) == 0);
    CHECK(rep.count(CheckStatus::Skipped) == 0);
    CHECK(rep.exit_code() == 0);
    std::set<std::string> seen;
    for (const auto& r : rep.checks) seen.insert(r.check);
    CHECK(seen.size() == check_registry().size());
  }

  TEST_CASE("selected checks only") {
    auto rep = run(gen_torus(5), {"mfw", "linking"}, 0, 3);
    for (const auto& r : rep.checks) CHECK((r.check == "mfw" || r.check == "linking"));
    CHECK(rep.exit_code() == 0);
  }

  TEST_CASE("large inputs skip the double checks by default") {
    auto rep = run(gen_torus(7), {"double-extremes"});
    REQUIRE_FALSE(rep.checks.empty());
    CHECK(rep.checks.front().status == CheckStatus::Skipped);
    CHECK(rep.exit_code() == 2);
  }

  TEST_CASE("counter fixture is rejected as a double input") {
    auto fx = counter_fixtures().front();
    auto rep = run(fx, {});
    bool found = false;
    for (const auto& r : rep.checks)
      if (r.check == "double-input") {
        found = true;
        CHECK(r.status == CheckStatus::Pass);
      }
    CHECK(found);
  }

  TEST_CASE("report serialisation") {
    auto rep = run(gen_torus(3), {"mfw", "properness"});
    auto j = nlohmann::json::parse(rep.to_json(false));
    CHECK(j["summary"]["exit_code"] == 0);
    CHECK(j["summary"]["pass"] == rep.count(CheckStatus::Pass));
    CHECK(j["checks"].size() == rep.checks.size());
    auto tsv = rep.to_tsv(false);
    CHECK(tsv.rfind("entry\tcheck\tanchor", 0) == 0);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == static_cast<long>(rep.checks.size()) + 1);
  }

  TEST_CASE("exit code precedence") {
    VerificationReport r;
    CHECK(r.exit_code() == 0);
    r.checks.push_back({});
    r.checks.back().status = CheckStatus::Skipped;
    CHECK(r.exit_code() == 2);
    r.checks.push_back({});
    r.checks.back().status = CheckStatus::Fail;
    CHECK(r.exit_code() == 1);
  }
}
