#pragma once

#include <string>
#include <vector>

#include "camoforge/camo.hpp"
#include "camoforge/netlist.hpp"

namespace camoforge {

struct CellCost {
  double delay = 0.0;
  double power = 0.0;
};

/// Per-cell delay/power table. The default table carries unit baseline
/// cells and the camouflaged-cell ratios measured against them:
/// CAMO-as-OR is 5.16x the OR2@LOW delay and 1.04x its power,
/// CAMO-as-AND is 4.08x the AND2@HIGH delay and 1.39x its power.
/// Absolute per-cell values are deliberately unitless; supply a
/// characterization file to override.
struct CellCharacterization {
  CellCost and2_high{1.0, 1.0};
  CellCost or2_low{1.0, 1.0};
  CellCost camo_as_and_high{4.08, 1.39};
  CellCost camo_as_or_low{5.16, 1.04};
  CellCost inv{0.2, 0.2};
  CellCost konst{0.0, 0.0};

  /// Cost of one gate. CAMO cells are costed as camouflaged; `as_or`
  /// picks which camouflaged entry applies. Throws ConfigError for a
  /// kind/flavor pair with no table entry (e.g. AND2 without HIGH).
  CellCost cost(GateKind kind, VthFlavor flavor, bool as_or) const;
};

std::string chars_to_json(const CellCharacterization& chars);
CellCharacterization chars_from_json(const std::string& text);

struct CriticalPath {
  double delay = 0.0;
  std::vector<NetId> gate_ids; // in path order, first gate after the PI
};

/// Longest weighted input-to-output path (dynamic programming over
/// topological order). CAMO cells take the camouflaged cost picked by
/// `assignment_for_camo` (empty for CAMO-free netlists). Ties break
/// toward the smallest gate id, so reported paths are deterministic.
CriticalPath critical_path_delay(const Netlist& netlist, const CamoAssignment& assignment_for_camo,
                                 const CellCharacterization& chars);

/// Sum of per-gate power entries.
double total_power(const Netlist& netlist, const CamoAssignment& assignment_for_camo,
                   const CellCharacterization& chars);

struct OverheadReport {
  double baseline_delay = 0.0;
  double camo_delay = 0.0;
  double delay_overhead_pct = 0.0;
  double baseline_power = 0.0;
  double camo_power = 0.0;
  double power_overhead_pct = 0.0;
  std::vector<NetId> critical_path;
  double min_clock_constraint = 0.0;
};

/// Delay/power of baseline vs camouflaged netlist, normalized to the
/// baseline: overhead_pct = (camo/baseline - 1) * 100. The camouflaged
/// netlist must be apply_camouflage(baseline, plan) (checked). The
/// minimum clock is max(2 * the largest input-inverter delay, the
/// EVAL-phase path): inverters settle during precharge, which must span
/// at least half the period, and cost zero on the EVAL path itself.
OverheadReport overhead_report(const Netlist& baseline, const Netlist& camo, const CamoPlan& plan,
                               const CellCharacterization& chars);

/// Aligned-column text rendering of a report.
std::string overhead_report_text(const OverheadReport& report);

} // namespace camoforge
