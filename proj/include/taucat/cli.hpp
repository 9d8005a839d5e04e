#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taucat {

// One CLI invocation. Identical jobs produce byte-identical reports.
struct JobSpec {
  std::string algebra;               // spec file path or fixture name
  std::vector<std::string> command;  // e.g. {"tau", "list"}
  std::string format = "table";      // table | json | dot
  bool signed_entries = false;       // seq list: include shifted entries
  int length = -1;                   // seq list: entry count, -1 = vertex count
  unsigned seed = 1;                 // seed for randomized internals
  int pd_cap = 32;                   // cap for projective dimension scans
};

// Runs one job, writing the report to `out` and diagnostics to `err`.
// Exit status: 0 = pass, 1 = verification failure, 2 = input error.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace taucat
