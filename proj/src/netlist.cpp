#include "camoforge/netlist.hpp"

#include <algorithm>
#include <queue>

#include <nlohmann/json.hpp>

#include "camoforge/errors.hpp"

namespace camoforge {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::And2: return "AND2";
    case GateKind::Or2: return "OR2";
    case GateKind::Inv: return "INV";
    case GateKind::Camo: return "CAMO";
    case GateKind::Const0: return "CONST0";
    case GateKind::Const1: return "CONST1";
  }
  return "?";
}

const char* to_string(VthFlavor flavor) {
  switch (flavor) {
    case VthFlavor::Low: return "LOW";
    case VthFlavor::High: return "HIGH";
    case VthFlavor::NA: return "NA";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string& s) {
  if (s == "AND2") return GateKind::And2;
  if (s == "OR2") return GateKind::Or2;
  if (s == "INV") return GateKind::Inv;
  if (s == "CAMO") return GateKind::Camo;
  if (s == "CONST0") return GateKind::Const0;
  if (s == "CONST1") return GateKind::Const1;
  throw ParseError("unknown gate kind '" + s + "'");
}

VthFlavor vth_flavor_from_string(const std::string& s) {
  if (s == "LOW") return VthFlavor::Low;
  if (s == "HIGH") return VthFlavor::High;
  if (s == "NA") return VthFlavor::NA;
  throw ParseError("unknown vth flavor '" + s + "'");
}

std::size_t fanin_arity(GateKind kind) {
  switch (kind) {
    case GateKind::And2:
    case GateKind::Or2:
    case GateKind::Camo: return 2;
    case GateKind::Inv: return 1;
    case GateKind::Const0:
    case GateKind::Const1: return 0;
  }
  return 0;
}

std::size_t Netlist::camo_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(),
                    [](const Gate& g) { return g.kind == GateKind::Camo; }));
}

std::vector<std::size_t> Netlist::topological_order() const {
  const std::size_t n_inputs = inputs.size();
  // gate index by driven net id
  std::vector<std::size_t> gate_of_net(num_nets(), SIZE_MAX);
  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    if (gates[gi].id >= num_nets())
      throw ValidationError("gate id " + std::to_string(gates[gi].id) + " out of range");
    gate_of_net[gates[gi].id] = gi;
  }

  std::vector<std::size_t> pending(gates.size(), 0);
  std::vector<std::vector<std::size_t>> dependents(gates.size());
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;

  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    std::size_t unresolved = 0;
    for (NetId net : gates[gi].fanin) {
      if (net >= n_inputs) {
        if (net >= num_nets() || gate_of_net[net] == SIZE_MAX)
          throw ValidationError("gate " + std::to_string(gates[gi].id) +
                                " references undriven net " + std::to_string(net));
        ++unresolved;
        dependents[gate_of_net[net]].push_back(gi);
      }
    }
    pending[gi] = unresolved;
    if (unresolved == 0) ready.push(gi);
  }

  std::vector<std::size_t> order;
  order.reserve(gates.size());
  while (!ready.empty()) {
    const std::size_t gi = ready.top();
    ready.pop();
    order.push_back(gi);
    for (std::size_t dep : dependents[gi])
      if (--pending[dep] == 0) ready.push(dep);
  }
  if (order.size() != gates.size())
    throw ValidationError("netlist has a combinational cycle");
  return order;
}

void validate(const Netlist& netlist) {
  const std::size_t n_inputs = netlist.inputs.size();
  const std::size_t n_nets = netlist.num_nets();

  for (std::size_t i = 0; i < n_inputs; ++i)
    if (netlist.inputs[i] != i)
      throw ValidationError("primary inputs must occupy net ids 0.." +
                            std::to_string(n_inputs - 1) + " in order");

  std::vector<bool> driven(n_nets, false);
  for (const Gate& gate : netlist.gates) {
    if (gate.id < n_inputs)
      throw ValidationError("gate " + std::to_string(gate.id) + " drives a primary input net");
    if (gate.id >= n_nets)
      throw ValidationError("gate id " + std::to_string(gate.id) + " out of range");
    if (driven[gate.id])
      throw ValidationError("net " + std::to_string(gate.id) + " has more than one driver");
    driven[gate.id] = true;
    if (gate.fanin.size() != fanin_arity(gate.kind))
      throw ValidationError("gate " + std::to_string(gate.id) + " (" + to_string(gate.kind) +
                            ") expects " + std::to_string(fanin_arity(gate.kind)) +
                            " fan-ins, has " + std::to_string(gate.fanin.size()));
    for (NetId net : gate.fanin)
      if (net >= n_nets)
        throw ValidationError("gate " + std::to_string(gate.id) + " references unknown net " +
                              std::to_string(net));
  }
  for (std::size_t net = n_inputs; net < n_nets; ++net)
    if (!driven[net])
      throw ValidationError("net " + std::to_string(net) + " has no driver");
  for (NetId net : netlist.outputs)
    if (net >= n_nets)
      throw ValidationError("output references unknown net " + std::to_string(net));

  netlist.topological_order(); // throws on cycles
}

std::vector<bool> evaluate(const Netlist& netlist, const std::vector<bool>& input) {
  if (input.size() != netlist.inputs.size())
    throw EvalError("input vector has " + std::to_string(input.size()) + " bits, netlist has " +
                    std::to_string(netlist.inputs.size()) + " inputs");

  std::vector<bool> value(netlist.num_nets(), false);
  for (std::size_t i = 0; i < input.size(); ++i) value[i] = input[i];

  for (std::size_t gi : netlist.topological_order()) {
    const Gate& g = netlist.gates[gi];
    switch (g.kind) {
      case GateKind::And2: value[g.id] = value[g.fanin[0]] && value[g.fanin[1]]; break;
      case GateKind::Or2: value[g.id] = value[g.fanin[0]] || value[g.fanin[1]]; break;
      case GateKind::Inv: value[g.id] = !value[g.fanin[0]]; break;
      case GateKind::Const0: value[g.id] = false; break;
      case GateKind::Const1: value[g.id] = true; break;
      case GateKind::Camo:
        throw EvalError("unresolved CAMO gate " + std::to_string(g.id) +
                        "; resolve an assignment first");
    }
  }

  std::vector<bool> out;
  out.reserve(netlist.outputs.size());
  for (NetId net : netlist.outputs) out.push_back(value[net]);
  return out;
}

std::string netlist_to_json(const Netlist& netlist) {
  nlohmann::ordered_json doc;
  doc["schema"] = "camoforge-netlist-v1";
  doc["inputs"] = netlist.inputs;
  doc["outputs"] = netlist.outputs;
  auto& gates = doc["gates"] = nlohmann::ordered_json::array();
  std::vector<const Gate*> sorted;
  sorted.reserve(netlist.gates.size());
  for (const Gate& g : netlist.gates) sorted.push_back(&g);
  std::sort(sorted.begin(), sorted.end(),
            [](const Gate* a, const Gate* b) { return a->id < b->id; });
  for (const Gate* g : sorted) {
    nlohmann::ordered_json item;
    item["id"] = g->id;
    item["kind"] = to_string(g->kind);
    item["fanin"] = g->fanin;
    item["vth_flavor"] = to_string(g->vth_flavor);
    gates.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

Netlist netlist_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != "camoforge-netlist-v1")
      throw ParseError("unsupported netlist schema '" +
                       doc.at("schema").get<std::string>() + "'");
    Netlist netlist;
    netlist.inputs = doc.at("inputs").get<std::vector<NetId>>();
    netlist.outputs = doc.at("outputs").get<std::vector<NetId>>();
    for (const auto& item : doc.at("gates")) {
      Gate g;
      g.id = item.at("id").get<NetId>();
      g.kind = gate_kind_from_string(item.at("kind").get<std::string>());
      g.fanin = item.at("fanin").get<std::vector<NetId>>();
      g.vth_flavor = vth_flavor_from_string(item.at("vth_flavor").get<std::string>());
      netlist.gates.push_back(std::move(g));
    }
    validate(netlist);
    return netlist;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed netlist document: ") + e.what());
  }
}

} // namespace camoforge
