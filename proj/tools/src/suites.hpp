#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace vertexlab::cli {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int max_n = 0;  // 0 keeps the per-family defaults; otherwise lowers every size cap to this value
  int jobs = 1;
};

// local, transfer, sov, partition, asm, all
const std::vector<std::string>& suite_names();

// All random parameters are drawn while the list is built, from one sampler per suite seeded by
// (seed, suite), so a suite gives the same instances whether it runs alone or inside "all".
std::vector<Task> suite_tasks(const std::string& suite, const SuiteConfig& cfg);

Report run_suite(const std::string& suite, const SuiteConfig& cfg);

}  // namespace vertexlab::cli
