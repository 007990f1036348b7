#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zsum {

// Parsed command line. Exit-code contract: 0 all-pass / compute success,
// 1 any fail entry or counterexample, 2 usage error, 3 capped-only
// incompleteness.
struct RunConfig {
  std::string command;  // compute | verify | hunt | report
  std::string group;
  std::optional<std::string> invariant;
  std::optional<int> index_i;
  std::optional<int> ell;
  int scan_extra = 0;
  std::optional<std::string> spec;
  std::optional<std::string> suite;
  int threads = 1;
  double budget_seconds = 0.0;
  std::optional<int> length_cap;
  std::filesystem::path cache_dir;
  bool no_cache = false;
  bool no_symmetry = false;
  bool up_to_aut = true;
  std::string format = "table";  // table | json | csv
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by parse_args for --help; carries the help text (exit 0).
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

// Throws UsageError on malformed arguments (the CLI maps that to exit 2).
RunConfig parse_args(const std::vector<std::string>& args);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse + run + error mapping; argv[0] excluded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsum
