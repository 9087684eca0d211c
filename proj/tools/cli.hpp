#pragma once

// Command-line front end: job configuration, the four subcommands and their
// JSON output. Shared by the okbody binary and the CLI tests.

#include "okbody/okbody.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace okbody::cli {

struct JobConfig {
  std::string type;
  std::string matrix_file;
  std::string word;
  std::string bundle;
  long long max_level = 4;
  long long box = 2;
  std::string mu;
  std::string torus_proj_file;
  std::string out;
  unsigned long seed = 20240611;
  bool quick = false;
  std::string fixture;  // verify: previously emitted body/global output to re-check
};

/// Reads a JSON config whose keys mirror the long flag names (dashes or underscores).
JobConfig load_config(const std::string& path);

struct ReportEntry {
  std::string case_name;
  std::string invariant;
  std::string status;  // pass, fail or info
  std::string details;
};

struct CommandResult {
  nlohmann::json output;
  std::vector<ReportEntry> report;
  /// 0 unless a report entry failed (then 4).
  int exit_code() const;
};

/// The Bott-Samelson variety named by type (or matrix file) and word. Rejects
/// unreduced words.
BottSamelson make_variety(const JobConfig& cfg);

CommandResult cmd_body(const JobConfig& cfg);
CommandResult cmd_global(const JobConfig& cfg);
CommandResult cmd_weights(const JobConfig& cfg);
CommandResult cmd_verify(const JobConfig& cfg);

nlohmann::json to_json(const Q& q);
nlohmann::json to_json(const ZVec& v);
nlohmann::json to_json(const RationalPolytope& p);
nlohmann::json to_json(const RationalCone& c);
nlohmann::json to_json(const std::vector<ReportEntry>& report);

/// Full entry point: parses argv, runs, writes output. Returns the exit code.
int run(int argc, const char* const* argv);

}  // namespace okbody::cli
