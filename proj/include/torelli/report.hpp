#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "torelli/checks.hpp"
#include "torelli/config.hpp"

namespace torelli {

/// Result of one job. Keys of `inputs` and `outputs` are sorted, rationals and
/// algebraic values are canonical strings, so serialization is deterministic.
struct ReportDocument {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<Verdict> verdicts;

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"decompose", "forms", "johnson", "act", "audit", "invariants"};
  return names;
}

/// Dispatches on config.command. Throws Error subclasses on bad input.
ReportDocument run(const JobConfig& config);

}  // namespace torelli
