#include "defectforms/claims.hpp"

namespace defectforms {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Report: return "REPORT";
    case ClaimStatus::Skip: return "SKIP";
  }
  return "?";
}

ClaimResult make_claim(std::string id, std::string anchor, const TensorForm& residual, bool verify_or_report,
                       const ZeroTestConfig& cfg) {
  ClaimResult r;
  r.claim_id = std::move(id);
  r.anchor = std::move(anchor);
  r.residual = residual;
  for (std::size_t flat = 0; flat < residual.size(); ++flat) {
    const Form& f = residual[flat];
    for (std::size_t slot = 0; slot < f.size(); ++slot) {
      if (is_zero(f[slot], cfg)) continue;
      std::string idx;
      for (int i : residual.indices(flat)) {
        if (!idx.empty()) idx += ',';
        idx += std::to_string(i + 1);
      }
      idx += ':';
      IndexMask m = Form::slot_mask(f.degree(), slot);
      for (int k = 0; k < 3; ++k)
        if (m & (1u << k)) idx += std::to_string(k + 1);
      r.discrepancy.push_back({idx, f[slot]});
    }
  }
  r.status = r.discrepancy.empty() ? ClaimStatus::Pass : verify_or_report ? ClaimStatus::Report : ClaimStatus::Fail;
  return r;
}

ClaimResult skipped_claim(std::string id, std::string anchor, std::string note) {
  ClaimResult r;
  r.claim_id = std::move(id);
  r.anchor = std::move(anchor);
  r.note = std::move(note);
  return r;
}

std::string format_claim(const ClaimResult& r) {
  std::string out = "CLAIM " + r.claim_id + " STATUS=" + to_string(r.status) +
                    " NONZERO=" + std::to_string(r.discrepancy.size()) + "\n";
  if (r.status != ClaimStatus::Pass)
    for (const auto& t : r.discrepancy) out += "  TERM " + t.indices + " RESIDUAL " + t.residual.to_string() + "\n";
  if (!r.note.empty()) out += "  NOTE " + r.note + "\n";
  return out;
}

bool passed(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (r.status == ClaimStatus::Fail) return false;
  return true;
}

}  // namespace defectforms
