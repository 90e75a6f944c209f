#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vertexlab::cli {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Outcome {
  Status status = Status::Fail;
  std::string lhs, rhs;
  // When non-empty, each part is reported as its own check "<task id>/<name>".
  std::vector<std::pair<std::string, Outcome>> parts;
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

// A check is identified as "<family>/<instance>"; the family selects the anchor.
struct Task {
  std::string id;
  ParamList params;
  std::function<Outcome()> run;
};

struct CheckResult {
  std::string id, anchor;
  ParamList params;
  Status status = Status::Fail;
  std::string lhs, rhs;
  double elapsed_ms = 0;
};

struct Report {
  std::string command;
  ParamList config;
  std::vector<CheckResult> checks;  // sorted by id

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
};

// Family -> anchor text.  Every check family used by the suites is listed here.
const std::map<std::string, std::string>& anchor_registry();
std::string family_of(const std::string& id);
// Throws std::out_of_range for an unregistered family.
const std::string& anchor_for(const std::string& id);

// Runs tasks on up to `jobs` threads; exceptions become failures.  Results are sorted by id.
std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, int jobs);

Outcome compare(const std::string& lhs, const std::string& rhs);
Outcome truth(bool ok, const std::string& what = "holds");

enum class Format { Human, Json, Csv };

// Elapsed times are left out of JSON and CSV unless `timings` is set, so that equal inputs give equal bytes.
std::string render(const Report& r, Format f, bool timings);

}  // namespace vertexlab::cli
