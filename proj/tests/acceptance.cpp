// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "report.hpp"
#include "suites.hpp"

using namespace vertexlab::cli;

namespace {

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

bool any_prefix(const std::string& id, std::initializer_list<const char*> prefixes) {
  for (const char* p : prefixes)
    if (starts(id, std::string(p) + "/")) return true;
  return false;
}

struct Criterion {
  int number;
  std::string title;
  double limit_s;  // 0 = no runtime bound
  std::function<bool(const std::string&)> task_filter;
  std::function<bool(const std::string&)> result_filter = [](const std::string&) { return true; };
};

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  cfg.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const std::vector<Task> all = suite_tasks("all", cfg);

  const std::vector<Criterion> criteria{
      {1, "local relations: Yang-Baxter, inversion, crossing, boundary", 10,
       [](const std::string& id) { return starts(id, "local."); }},
      {2, "fusion relation, N <= 4, both twists", 60, [](const std::string& id) { return any_prefix(id, {"transfer.fusion"}); }},
      {3, "null vectors and H phi = 0", 300,
       [](const std::string& id) { return any_prefix(id, {"transfer.null_inhom", "transfer.null_hom", "transfer.zero_energy"}); }},
      {4, "separated-variables structure and reconstruction, N <= 3", 0,
       [](const std::string& id) { return any_prefix(id, {"sov.structure", "sov.reconstruction"}); }},
      {5, "overlap sum rule and its homogeneous ASM forms", 0,
       [](const std::string& id) { return any_prefix(id, {"partition.sumrule", "partition.sumrule_hom"}); }},
      {6, "mixed scalar product, recurrence, quarter-turn pairing", 0,
       [](const std::string& id) {
         return any_prefix(id, {"partition.mixed", "partition.recurrence"}) || starts(id, "asm.links/N2/");
       },
       [](const std::string& id) {
         return !starts(id, "asm.links/") || id.ends_with("/pairing.qt") || id.ends_with("/qt.factorisation");
       }},
      {7, "zero-energy components and normalisation, N <= 5", 0,
       [](const std::string& id) {
         return starts(id, "asm.links/") || any_prefix(id, {"asm.av", "asm.uu", "asm.vhp", "asm.closed"});
       },
       [](const std::string& id) {
         return !starts(id, "asm.links/") || id.find("/component.") != std::string::npos || id.ends_with("/norm.phi_D");
       }},
      {8, "partition-function oracles and wheel condition", 120,
       [](const std::string& id) { return any_prefix(id, {"partition.oracle", "partition.wheel"}); }},
      {9, "spectral pairing and E = 0 (non-negativity reported only)", 0,
       [](const std::string& id) { return any_prefix(id, {"transfer.spectrum", "transfer.conjecture"}); }},
      {10, "ASM enumeration baselines", 0,
       [](const std::string& id) {
         return starts(id, "asm.count/plain/") || id == "asm.genfun/plain3" || id == "asm.genfun/vs5";
       }},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    std::vector<Task> tasks;
    for (const Task& t : all)
      if (c.task_filter(t.id)) tasks.push_back(t);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckResult> results = run_tasks(tasks, 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int pass = 0, fail = 0, skipped = 0;
    std::string first_failure;
    for (const CheckResult& r : results) {
      if (!c.result_filter(r.id)) continue;
      if (r.status == Status::Pass) ++pass;
      else if (r.status == Status::Skipped) ++skipped;
      else {
        ++fail;
        if (first_failure.empty()) first_failure = r.id;
      }
    }
    const bool in_time = c.limit_s <= 0 || secs <= c.limit_s;
    const bool ok = fail == 0 && pass > 0 && in_time;
    all_ok = all_ok && ok;
    std::printf("[%s] %2d %s: %d passed, %d failed, %d reported; %.1f s", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                pass, fail, skipped, secs);
    if (c.limit_s > 0) std::printf(" (limit %.0f s)", c.limit_s);
    if (!first_failure.empty()) std::printf(" first failure: %s", first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
