#pragma once

#include <string>
#include <vector>

#include "defectforms/exterior.hpp"

namespace defectforms {

enum class ClaimStatus { Pass, Fail, Report, Skip };

std::string to_string(ClaimStatus s);

/// One nonzero residual component. `indices` reads "1,2:12": frame indices
/// (1-based), a colon, then the form multi-index (empty for 0-forms).
struct DiscrepancyTerm {
  std::string indices;
  ScalarField residual;
};

struct ClaimResult {
  std::string claim_id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Skip;
  TensorForm residual;
  std::vector<DiscrepancyTerm> discrepancy;
  /// Why a claim was skipped.
  std::string note;
};

/// Builds a result from a residual. A nonzero residual is REPORT when
/// `verify_or_report` is set and FAIL otherwise.
ClaimResult make_claim(std::string id, std::string anchor, const TensorForm& residual, bool verify_or_report = false,
                       const ZeroTestConfig& cfg = {});
ClaimResult skipped_claim(std::string id, std::string anchor, std::string note);

/// Canonical text: the CLAIM line, indented TERM lines for non-PASS results, then a NOTE line if any.
std::string format_claim(const ClaimResult& r);

bool passed(const std::vector<ClaimResult>& results);

}  // namespace defectforms
