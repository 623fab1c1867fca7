#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "camoforge/netlist.hpp"
#include "camoforge/pla.hpp"

namespace camoforge {

enum class TreeShape { Balanced, Chain };

/// Maps each primary input to its true rail and, when some cube uses
/// the complemented literal, to the complement rail driven by a single
/// static inverter at that input.
struct DualRailMap {
  std::vector<std::string> original_inputs;
  std::map<std::string, std::pair<NetId, NetId>> rail_pairs; // name -> (true, complement)
  std::set<std::string> complement_used;
};

struct SynthResult {
  Netlist netlist;
  DualRailMap rails;
};

/// Lowers a sum-of-products table to a non-inverting 2-input AND/OR
/// netlist: complement rails only where a cube needs the complemented
/// literal, a per-cube AND tree over its literal rails, and a per-output
/// OR tree over its cube nets. Zero-cube outputs become CONST0 and an
/// all-dash cube becomes a CONST1 leaf; functions that happen to cover
/// all minterms are emitted structurally, not folded. Vth flavors are
/// assigned (AND->HIGH, OR->LOW).
SynthResult synthesize(const PlaTable& pla, TreeShape shape = TreeShape::Balanced);

struct DominoViolation {
  NetId gate_id;
  std::string reason;
};

/// PASS iff every INV is fed by a primary input and all other gates
/// are monotone (AND2/OR2/CAMO/CONST). Under that shape, 1->0
/// transitions happen only at input inverters during precharge.
struct DominoReport {
  bool pass = true;
  std::vector<DominoViolation> violations;
};

DominoReport check_domino_compatible(const Netlist& netlist);

/// AND2 -> HIGH, OR2 -> LOW, everything else NA. Idempotent.
Netlist assign_vth_flavors(Netlist netlist);

} // namespace camoforge
