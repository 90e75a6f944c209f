#include "doctest.h"

#include <set>
#include <stdexcept>

#include "json.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace vertexlab::cli;

TEST_CASE("every suite check has an anchor") {
  SuiteConfig cfg;  // default caps: every family has instances
  std::set<std::string> families;
  for (const Task& t : suite_tasks("all", cfg)) {
    CAPTURE(t.id);
    CHECK_NOTHROW(anchor_for(t.id));
    families.insert(family_of(t.id));
  }
  // and every registered family is exercised
  for (const auto& [family, anchor] : anchor_registry()) {
    CAPTURE(family);
    CHECK(families.count(family) == 1);
    CHECK(!anchor.empty());
  }
}

TEST_CASE("task ids are unique") {
  SuiteConfig cfg;
  std::set<std::string> ids;
  for (const Task& t : suite_tasks("all", cfg)) CHECK(ids.insert(t.id).second);
}

TEST_CASE("suite draws depend only on seed and suite") {
  SuiteConfig cfg;
  cfg.seed = 9;
  cfg.max_n = 2;
  const auto alone = suite_tasks("sov", cfg);
  const auto all = suite_tasks("all", cfg);
  for (const Task& a : alone) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Task& t) { return t.id == a.id; });
    REQUIRE(it != all.end());
    CHECK(it->params == a.params);
  }
  cfg.seed = 10;
  const auto other = suite_tasks("sov", cfg);
  CHECK(other.front().params != alone.front().params);
  CHECK_THROWS_AS(suite_tasks("nope", cfg), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across job counts") {
  SuiteConfig cfg;
  cfg.seed = 5;
  cfg.max_n = 2;
  cfg.jobs = 1;
  const std::string one = render(run_suite("partition", cfg), Format::Json, false);
  cfg.jobs = 3;
  const std::string three = render(run_suite("partition", cfg), Format::Json, false);
  CHECK(one == three);
  const auto j = nlohmann::json::parse(one);
  CHECK(j["summary"]["fail"] == "0");
  CHECK(!j["checks"].empty());
  CHECK(!j["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("runner turns exceptions into failures and expands parts") {
  std::vector<Task> tasks{
      {"asm.count/b", {}, [] { return truth(true); }},
      {"asm.count/a", {}, []() -> Outcome { throw std::runtime_error("boom"); }},
      {"asm.links/c", {}, [] {
         Outcome o;
         o.parts.emplace_back("x", truth(true));
         o.parts.emplace_back("y", compare("1", "2"));
         return o;
       }},
  };
  const auto r = run_tasks(tasks, 2);
  REQUIRE(r.size() == 4);
  CHECK(r[0].id == "asm.count/a");
  CHECK(r[0].status == Status::Fail);
  CHECK(r[0].lhs == "error: boom");
  CHECK(r[1].status == Status::Pass);
  CHECK(r[2].id == "asm.links/c/x");
  CHECK(r[3].status == Status::Fail);
  CHECK_THROWS_AS(run_tasks({{"unknown.family/x", {}, [] { return truth(true); }}}, 1), std::out_of_range);
}

TEST_CASE("CSV escaping") {
  Report r;
  r.command = "verify x";
  r.checks.push_back({"asm.count/x", "a, \"b\"", {{"k", "v"}}, Status::Pass, "1, 2", "3", 0});
  const std::string csv = render(r, Format::Csv, false);
  CHECK(csv.find("\"a, \"\"b\"\"\"") != std::string::npos);
  CHECK(csv.find("\"1, 2\"") != std::string::npos);
}
