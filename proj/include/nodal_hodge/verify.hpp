#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nodal_hodge/census.hpp"
#include "nodal_hodge/hodge_table.hpp"

namespace nodal_hodge::verify {

struct VerifyConfig {
  int g0_max = 4;
  int k_max = 6;
  oracle::CensusOptions census;
};

enum class Level { Betti, Weight, Hodge };

std::string level_name(Level level);

/// One compared index point. l, p, q are -1 where the level does not use them.
struct VerificationRecord {
  int g0 = 0;
  int k = 0;
  Level level = Level::Betti;
  int i = 0;
  int l = -1;
  int p = -1;
  int q = -1;
  Multiplicity closed_corrected = 0;
  Multiplicity structural = 0;
  Multiplicity census = 0;
  std::optional<Multiplicity> printed = std::nullopt;  // literal published formula, when one exists

  bool routes_agree() const { return closed_corrected == structural && structural == census; }
  bool printed_agrees() const { return !printed || *printed == census; }
};

struct VerificationReport {
  VerifyConfig config;
  std::size_t points_checked = 0;
  /// Every point where some route is nonzero or a disagreement occurs.
  std::vector<VerificationRecord> records;
  /// Points where corrected, structural and census routes differ.
  std::vector<VerificationRecord> route_mismatches;
  /// Points where a printed formula differs from the census.
  std::vector<VerificationRecord> printed_disagreements;

  bool verified() const { return route_mismatches.empty(); }
};

/// Sweeps every (g0, k) with g0 <= g0_max, k <= k_max and compares the
/// closed-form, structural and census routes at every (i), (i, l) and
/// (i, l, p, q). Throws ResourceLimitError before doing any work if a cell
/// exceeds the census cap.
VerificationReport run_verification(const VerifyConfig& config);

std::string render_report_text(const VerificationReport& report);
std::string render_report_json(const VerificationReport& report);

}  // namespace nodal_hodge::verify
