#include <set>

#include "asmkit/errors.hpp"
#include "asmkit/verify.hpp"
#include "doctest.h"

using namespace asmkit;

namespace {
CheckParams kn(int k, int n) {
  CheckParams p;
  p.k = k;
  p.n = n;
  return p;
}
CheckParams only_k(int k) {
  CheckParams p;
  p.k = k;
  return p;
}
}  // namespace

TEST_CASE("run_check examples") {
  CheckResult r = run_check("S1", kn(2, 3));
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.witness == "b=7 m=7");
  CHECK(run_check("S15", only_k(1)).status == CheckStatus::Pass);
  CHECK(run_check("S113", kn(2, 3)).status == CheckStatus::Pass);
  CHECK(kn(2, 3).to_string() == "k=2 n=3");
}

TEST_CASE("corrupting Phi makes the kernel check fail") {
  VerifyOptions o;
  o.corrupt_phi = true;
  CheckResult r = run_check("S15", only_k(2), o);
  CHECK(r.status == CheckStatus::Fail);
  CHECK_FALSE(r.witness.empty());
  CHECK(run_check("S15", only_k(2)).status == CheckStatus::Pass);
}

TEST_CASE("registry and parameter errors") {
  CHECK_THROWS_AS(run_check("S99", kn(2, 3)), RegistryError);
  CHECK_THROWS_AS(check_info("S99"), RegistryError);
  CHECK_THROWS_AS(run_check("S1", CheckParams{}), UsageError);
  CHECK_THROWS_AS(run_check("S1", kn(3, 2)), UsageError);
}

TEST_CASE("registry completeness") {
  const auto& all = registered_checks();
  CHECK(all.size() == 43);
  std::set<std::string> ids;
  for (const auto& c : all) {
    ids.insert(c.id);
    CHECK_FALSE(c.summary.empty());
  }
  CHECK(ids.size() == all.size());
  for (const char* id : {"S1", "S11", "S12", "S13", "S14", "S15", "S1523", "S12124"}) CHECK(ids.count(id) == 1);
}

TEST_CASE("run_all on a small grid") {
  auto results = run_all(2, 3);
  REQUIRE_FALSE(results.empty());
  for (const auto& r : results) {
    CHECK_MESSAGE(r.status != CheckStatus::Fail, r.id << " " << r.params.to_string() << ": " << r.witness);
    if (r.status == CheckStatus::Fail) CHECK_FALSE(r.witness.empty());
  }
  auto act5 = run_all(2, 3, "S15*");
  REQUIRE_FALSE(act5.empty());
  for (const auto& r : act5) CHECK(r.id.rfind("S15", 0) == 0);
  CHECK(matches_filter("S1211all", "S12*"));
  CHECK_FALSE(matches_filter("S13", "S12*"));
}

TEST_CASE("run_all is deterministic across thread counts") {
  VerifyOptions one, many;
  many.threads = 4;
  auto a = run_all(2, 3, "S1[12]*", one), b = run_all(2, 3, "S1[12]*", many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].witness == b[i].witness);
  }
  CHECK(format_human(a) == format_human(b));
}

TEST_CASE("output formats") {
  CheckResult r = run_check("S1", kn(1, 1));
  std::string line = format_record(r);
  CHECK(line.find("\"id\":\"S1\"") != std::string::npos);
  CHECK(line.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(format_human({r}).find("1 checks: 1 pass, 0 fail, 0 skipped") != std::string::npos);
  CHECK(fixed_wb3_elements().size() == 6);
}
