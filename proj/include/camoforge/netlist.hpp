#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace camoforge {

using NetId = std::uint32_t;

enum class GateKind { And2, Or2, Inv, Camo, Const0, Const1 };

/// Threshold-voltage flavor of a gate's transistors. The netlist
/// convention is HIGH for AND gates and LOW for OR gates; INV and CAMO
/// carry NA (a CAMO cell's flavor is exactly what camouflaging hides).
enum class VthFlavor { Low, High, NA };

const char* to_string(GateKind kind);
const char* to_string(VthFlavor flavor);
GateKind gate_kind_from_string(const std::string& s);
VthFlavor vth_flavor_from_string(const std::string& s);

/// Expected fan-in count for a gate kind (2 for AND2/OR2/CAMO, 1 for
/// INV, 0 for constants).
std::size_t fanin_arity(GateKind kind);

struct Gate {
  NetId id = 0; // the net this gate drives
  GateKind kind = GateKind::And2;
  std::vector<NetId> fanin;
  VthFlavor vth_flavor = VthFlavor::NA;

  bool operator==(const Gate&) const = default;
};

/// A combinational gate graph. Net ids are dense: primary inputs occupy
/// ids [0, inputs.size()) and every gate drives the net with its own id.
/// Outputs may reference input nets directly (buffer-free passthrough).
struct Netlist {
  std::vector<NetId> inputs;
  std::vector<NetId> outputs;
  std::vector<Gate> gates;

  std::size_t num_nets() const { return inputs.size() + gates.size(); }
  std::size_t camo_count() const;

  /// Gates in a topological evaluation order (fan-ins before gate).
  /// Deterministic: among ready gates, smallest id first.
  /// Throws ValidationError if the graph has a cycle.
  std::vector<std::size_t> topological_order() const;

  bool operator==(const Netlist&) const = default;
};

/// Checks the hard structural invariants: dense ids, primary inputs
/// first, exactly one driver per non-input net, fan-in arity per kind,
/// fan-in/output ids in range, and acyclicity. Throws ValidationError.
/// (The domino rule -- INV only at primary inputs -- is a soft rule
/// checked by check_domino_compatible, not here.)
void validate(const Netlist& netlist);

/// Evaluates the netlist on one input vector (topological order).
/// Throws EvalError if the netlist still contains CAMO cells.
std::vector<bool> evaluate(const Netlist& netlist, const std::vector<bool>& input);

/// Canonical JSON form (schema "camoforge-netlist-v1"), byte-stable.
std::string netlist_to_json(const Netlist& netlist);

/// Parses and validates a camoforge-netlist-v1 document.
Netlist netlist_from_json(const std::string& text);

} // namespace camoforge
