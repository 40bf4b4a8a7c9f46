#pragma once

#include "ultragrowth/config.hpp"
#include "ultragrowth/io.hpp"
#include "ultragrowth/verdict.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ultragrowth {

struct ClaimResult {
  int id = 0;
  std::string key;
  std::string claim;
  Verdict verdict;
};

struct SuiteReport {
  std::string suite;
  std::vector<ClaimResult> claims;

  Status overall() const;
};

/// "paper-claims" (the acceptance battery) and "invariants".
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const RunConfig& cfg = {});

/// One claim of the paper-claims battery by id (1..10).
ClaimResult run_claim(int id, const RunConfig& cfg = {});

Json to_json(const SuiteReport& r);

}  // namespace ultragrowth
