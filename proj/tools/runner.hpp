#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace defectforms::cli {

struct RunOptions {
  /// Claim suites for the continuity command; empty means "all".
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  bool strict_report = false;
};

struct Report {
  std::string command;
  std::vector<ClaimResult> claims;  // sorted by claim_id

  int count(ClaimStatus s) const;
  std::string text() const;
  /// Field-for-field mirror of text().
  std::string json() const;
  /// 0 without FAIL (and without REPORT under strict_report), 1 otherwise.
  int exit_code(bool strict_report) const;
};

const std::vector<std::string>& commands();

/// Throws DomainError for an unknown command or suite.
Report run(const std::string& command, const Scenario& scenario, const RunOptions& options = {});

}  // namespace defectforms::cli
