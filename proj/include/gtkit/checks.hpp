#pragma once

#include "gtkit/fpres.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gtkit {

enum class OutputFormat { text, json };

struct Config {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::uint64_t seed = 0;
  /// Glob patterns over check ids; empty selects everything.
  std::vector<std::string> filter;
  OutputFormat output = OutputFormat::text;
};

struct CheckResult {
  std::string id;
  bool passed = false;
  nlohmann::json expected;
  nlohmann::json actual;
  std::string claim;
  double elapsed_ms = 0;
  /// Name of the exception type when the check raised instead of finishing.
  std::string error_kind;

  /// {id, passed, expected, actual, paper_anchor, elapsed_ms}
  nlohmann::json to_json() const;
  static CheckResult from_json(const nlohmann::json& j);
};

/// Registered ids in registry order.
const std::vector<std::string>& check_ids();
bool is_registered(const std::string& id);

/// Ids whose result compares a fixed table of rows; each has a negative
/// control.
const std::vector<std::string>& table_check_ids();

/// Runs one check. Throws UnknownCheck, and rethrows CosetLimitExceeded with
/// the id in its message.
CheckResult run_check(const std::string& id, const Config& config = {});

/// Runs every check selected by config.filter in registry order; errors are
/// recorded in the results instead of propagating.
std::vector<CheckResult> run_all(const Config& config = {});

/// Re-runs a table check with one expected row corrupted. Returns true when
/// the comparator rejects the corrupted table.
bool negative_control_rejected(const std::string& id, const Config& config = {});

/// Shell-style glob match (`*`, `?`, `[...]`).
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace gtkit
