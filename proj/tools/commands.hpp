#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcldim/verification.hpp"

namespace vcldim::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kInfeasible = 3,
  kVerificationFailed = 4,
};

// Ordered key/value output. Text mode prints one `key value` line per entry;
// JSON mode folds repeated keys into arrays.
class Report {
 public:
  void add(std::string key, nlohmann::ordered_json value) { entries_.emplace_back(std::move(key), std::move(value)); }
  const std::vector<std::pair<std::string, nlohmann::ordered_json>>& entries() const { return entries_; }

  std::string text() const;
  std::string json() const;

 private:
  std::vector<std::pair<std::string, nlohmann::ordered_json>> entries_;
};

// Same fields and order as format_report.
void add_verification(Report& out, const VerificationReport& r);

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vcldim::cli
