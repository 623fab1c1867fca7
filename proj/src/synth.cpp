#include "camoforge/synth.hpp"

#include "camoforge/errors.hpp"

namespace camoforge {

namespace {

/// Reduces leaves to a single net with 2-input gates of the given kind.
/// Balanced: pair adjacent nets level by level (depth ceil(log2 m)).
/// Chain: left fold (depth m-1).
NetId build_tree(Netlist& netlist, std::vector<NetId> leaves, GateKind kind, TreeShape shape) {
  if (leaves.size() == 1) return leaves[0];
  if (shape == TreeShape::Balanced) {
    while (leaves.size() > 1) {
      std::vector<NetId> next;
      next.reserve((leaves.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < leaves.size(); i += 2) {
        const NetId id = static_cast<NetId>(netlist.num_nets());
        netlist.gates.push_back({id, kind, {leaves[i], leaves[i + 1]}, VthFlavor::NA});
        next.push_back(id);
      }
      if (leaves.size() % 2 == 1) next.push_back(leaves.back());
      leaves = std::move(next);
    }
    return leaves[0];
  }
  NetId acc = leaves[0];
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    const NetId id = static_cast<NetId>(netlist.num_nets());
    netlist.gates.push_back({id, kind, {acc, leaves[i]}, VthFlavor::NA});
    acc = id;
  }
  return acc;
}

} // namespace

SynthResult synthesize(const PlaTable& pla, TreeShape shape) {
  SynthResult result;
  Netlist& netlist = result.netlist;
  DualRailMap& rails = result.rails;

  rails.original_inputs = pla.input_labels;
  for (std::size_t i = 0; i < pla.num_inputs; ++i)
    netlist.inputs.push_back(static_cast<NetId>(i));

  // A complement rail exists iff some cube uses the complemented literal.
  std::vector<bool> complemented(pla.num_inputs, false);
  for (const Cube& cube : pla.cubes)
    for (std::size_t i = 0; i < pla.num_inputs; ++i)
      if (cube.inputs[i] == '0') complemented[i] = true;

  std::vector<NetId> complement_net(pla.num_inputs, 0);
  for (std::size_t i = 0; i < pla.num_inputs; ++i) {
    const NetId true_net = static_cast<NetId>(i);
    NetId comp_net = true_net;
    if (complemented[i]) {
      comp_net = static_cast<NetId>(netlist.num_nets());
      netlist.gates.push_back({comp_net, GateKind::Inv, {true_net}, VthFlavor::NA});
      complement_net[i] = comp_net;
      rails.complement_used.insert(pla.input_labels[i]);
    }
    rails.rail_pairs[pla.input_labels[i]] = {true_net, comp_net};
  }

  // Per output: an OR tree over per-cube AND trees. Cubes are never
  // shared across outputs.
  for (std::size_t out = 0; out < pla.num_outputs; ++out) {
    std::vector<NetId> cube_nets;
    for (const Cube& cube : pla.cubes) {
      if (cube.outputs[out] != '1') continue;
      std::vector<NetId> literals;
      for (std::size_t i = 0; i < pla.num_inputs; ++i) {
        if (cube.inputs[i] == '1')
          literals.push_back(static_cast<NetId>(i));
        else if (cube.inputs[i] == '0')
          literals.push_back(complement_net[i]);
      }
      if (literals.empty()) {
        // All-dash cube: asserts the output on every input vector.
        const NetId id = static_cast<NetId>(netlist.num_nets());
        netlist.gates.push_back({id, GateKind::Const1, {}, VthFlavor::NA});
        cube_nets.push_back(id);
      } else {
        cube_nets.push_back(build_tree(netlist, std::move(literals), GateKind::And2, shape));
      }
    }
    if (cube_nets.empty()) {
      const NetId id = static_cast<NetId>(netlist.num_nets());
      netlist.gates.push_back({id, GateKind::Const0, {}, VthFlavor::NA});
      netlist.outputs.push_back(id);
    } else {
      netlist.outputs.push_back(build_tree(netlist, std::move(cube_nets), GateKind::Or2, shape));
    }
  }

  netlist = assign_vth_flavors(std::move(netlist));
  return result;
}

DominoReport check_domino_compatible(const Netlist& netlist) {
  DominoReport report;
  const NetId n_inputs = static_cast<NetId>(netlist.inputs.size());
  for (const Gate& gate : netlist.gates) {
    if (gate.kind == GateKind::Inv) {
      if (gate.fanin[0] >= n_inputs)
        report.violations.push_back(
            {gate.id, "INV fed by internal net " + std::to_string(gate.fanin[0]) +
                          " (inverters are allowed at primary inputs only)"});
    }
    // AND2/OR2/CAMO/CONST are monotone; no other kinds exist.
  }
  report.pass = report.violations.empty();
  return report;
}

Netlist assign_vth_flavors(Netlist netlist) {
  for (Gate& gate : netlist.gates) {
    switch (gate.kind) {
      case GateKind::And2: gate.vth_flavor = VthFlavor::High; break;
      case GateKind::Or2: gate.vth_flavor = VthFlavor::Low; break;
      default: gate.vth_flavor = VthFlavor::NA; break;
    }
  }
  return netlist;
}

} // namespace camoforge
