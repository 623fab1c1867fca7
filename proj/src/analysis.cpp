#include "camoforge/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "camoforge/errors.hpp"

namespace camoforge {

CellCost CellCharacterization::cost(GateKind kind, VthFlavor flavor, bool as_or) const {
  switch (kind) {
    case GateKind::And2:
      if (flavor == VthFlavor::High) return and2_high;
      break;
    case GateKind::Or2:
      if (flavor == VthFlavor::Low) return or2_low;
      break;
    case GateKind::Camo:
      return as_or ? camo_as_or_low : camo_as_and_high;
    case GateKind::Inv:
      return inv;
    case GateKind::Const0:
    case GateKind::Const1:
      return konst;
  }
  throw ConfigError(std::string("no characterization entry for ") + to_string(kind) + "@" +
                    to_string(flavor) + "; run vth flavor assignment first");
}

namespace {

constexpr const char* kCharsSchema = "camoforge-chars-v1";

nlohmann::ordered_json cost_to_json(const CellCost& cost) {
  return {{"delay", cost.delay}, {"power", cost.power}};
}

CellCost cost_from_json(const nlohmann::json& item) {
  CellCost cost{item.at("delay").get<double>(), item.at("power").get<double>()};
  if (cost.delay < 0 || cost.power < 0)
    throw ParseError("characterization values must be non-negative");
  return cost;
}

/// Camouflaged-cost selector per gate, indexed by gate id. The
/// assignment addresses CAMO cells in ascending gate-id order.
std::map<NetId, bool> camo_as_or_by_id(const Netlist& netlist, const CamoAssignment& assignment) {
  std::vector<NetId> camo_ids;
  for (const Gate& g : netlist.gates)
    if (g.kind == GateKind::Camo) camo_ids.push_back(g.id);
  std::sort(camo_ids.begin(), camo_ids.end());
  if (camo_ids.size() != assignment.choices.size())
    throw ValidationError("assignment has " + std::to_string(assignment.choices.size()) +
                          " choices, netlist has " + std::to_string(camo_ids.size()) +
                          " CAMO cells");
  std::map<NetId, bool> as_or;
  for (std::size_t i = 0; i < camo_ids.size(); ++i)
    as_or[camo_ids[i]] = assignment.choices[i] == CamoChoice::Or;
  return as_or;
}

struct DelayModel {
  const CellCharacterization& chars;
  const std::map<NetId, bool>& as_or;
  bool inv_costs_zero = false;

  double operator()(const Gate& g) const {
    if (g.kind == GateKind::Inv && inv_costs_zero) return 0.0;
    const bool camo_or = g.kind == GateKind::Camo ? as_or.at(g.id) : false;
    return chars.cost(g.kind, g.vth_flavor, camo_or).delay;
  }
};

CriticalPath longest_path(const Netlist& netlist, const DelayModel& delay) {
  const std::size_t n_inputs = netlist.inputs.size();
  std::vector<double> arrival(netlist.num_nets(), 0.0);
  // Predecessor net on the best path, or the net itself for sources.
  std::vector<NetId> best_pred(netlist.num_nets(), 0);
  std::vector<std::size_t> gate_of_net(netlist.num_nets(), SIZE_MAX);

  for (std::size_t gi : netlist.topological_order()) {
    const Gate& g = netlist.gates[gi];
    gate_of_net[g.id] = gi;
    // Max-arrival fan-in wins; ties go to the smallest net id.
    double best = -1.0;
    NetId pred = g.id;
    for (NetId net : g.fanin) {
      if (arrival[net] > best || (arrival[net] == best && net < pred)) {
        best = arrival[net];
        pred = net;
      }
    }
    if (g.fanin.empty()) best = 0.0;
    arrival[g.id] = best + delay(g);
    best_pred[g.id] = pred;
  }

  CriticalPath path;
  if (netlist.outputs.empty()) return path;
  NetId end = netlist.outputs[0];
  for (NetId net : netlist.outputs)
    if (arrival[net] > arrival[end] || (arrival[net] == arrival[end] && net < end)) end = net;
  path.delay = arrival[end];

  NetId net = end;
  while (net >= n_inputs) {
    path.gate_ids.push_back(net);
    const Gate& g = netlist.gates[gate_of_net[net]];
    if (g.fanin.empty()) break; // constant source
    net = best_pred[net];
  }
  std::reverse(path.gate_ids.begin(), path.gate_ids.end());
  return path;
}

} // namespace

std::string chars_to_json(const CellCharacterization& chars) {
  nlohmann::ordered_json doc;
  doc["schema"] = kCharsSchema;
  doc["AND2_HIGH"] = cost_to_json(chars.and2_high);
  doc["OR2_LOW"] = cost_to_json(chars.or2_low);
  doc["CAMO_AS_AND_HIGH"] = cost_to_json(chars.camo_as_and_high);
  doc["CAMO_AS_OR_LOW"] = cost_to_json(chars.camo_as_or_low);
  doc["INV"] = cost_to_json(chars.inv);
  doc["CONST"] = cost_to_json(chars.konst);
  return doc.dump(2) + "\n";
}

CellCharacterization chars_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != kCharsSchema)
      throw ParseError("unsupported characterization schema");
    CellCharacterization chars;
    chars.and2_high = cost_from_json(doc.at("AND2_HIGH"));
    chars.or2_low = cost_from_json(doc.at("OR2_LOW"));
    chars.camo_as_and_high = cost_from_json(doc.at("CAMO_AS_AND_HIGH"));
    chars.camo_as_or_low = cost_from_json(doc.at("CAMO_AS_OR_LOW"));
    chars.inv = cost_from_json(doc.at("INV"));
    chars.konst = cost_from_json(doc.at("CONST"));
    if (chars.konst.delay != 0.0 || chars.konst.power != 0.0)
      throw ParseError("CONST cells must have zero delay and power");
    return chars;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed characterization document: ") + e.what());
  }
}

CriticalPath critical_path_delay(const Netlist& netlist, const CamoAssignment& assignment_for_camo,
                                 const CellCharacterization& chars) {
  const auto as_or = camo_as_or_by_id(netlist, assignment_for_camo);
  return longest_path(netlist, DelayModel{chars, as_or, false});
}

double total_power(const Netlist& netlist, const CamoAssignment& assignment_for_camo,
                   const CellCharacterization& chars) {
  const auto as_or = camo_as_or_by_id(netlist, assignment_for_camo);
  double sum = 0.0;
  for (const Gate& g : netlist.gates) {
    const bool camo_or = g.kind == GateKind::Camo ? as_or.at(g.id) : false;
    sum += chars.cost(g.kind, g.vth_flavor, camo_or).power;
  }
  return sum;
}

OverheadReport overhead_report(const Netlist& baseline, const Netlist& camo, const CamoPlan& plan,
                               const CellCharacterization& chars) {
  // The camouflaged netlist must be the baseline with exactly the
  // plan's gates replaced (gate order is not significant).
  const auto by_id = [](Netlist n) {
    std::sort(n.gates.begin(), n.gates.end(),
              [](const Gate& a, const Gate& b) { return a.id < b.id; });
    return n;
  };
  if (by_id(apply_camouflage(baseline, plan)) != by_id(camo))
    throw ValidationError("camouflaged netlist does not derive from the baseline via this plan");

  const CamoAssignment empty{};
  OverheadReport report;
  const auto base_path = critical_path_delay(baseline, empty, chars);
  const auto camo_path = critical_path_delay(camo, plan.true_assignment, chars);
  report.baseline_delay = base_path.delay;
  report.camo_delay = camo_path.delay;
  report.critical_path = camo_path.gate_ids;
  report.baseline_power = total_power(baseline, empty, chars);
  report.camo_power = total_power(camo, plan.true_assignment, chars);
  report.delay_overhead_pct = (report.camo_delay / report.baseline_delay - 1.0) * 100.0;
  report.power_overhead_pct = (report.camo_power / report.baseline_power - 1.0) * 100.0;

  double max_inv_delay = 0.0;
  for (const Gate& g : camo.gates)
    if (g.kind == GateKind::Inv) max_inv_delay = std::max(max_inv_delay, chars.inv.delay);
  const auto as_or = camo_as_or_by_id(camo, plan.true_assignment);
  const auto eval_path = longest_path(camo, DelayModel{chars, as_or, true});
  report.min_clock_constraint = std::max(2.0 * max_inv_delay, eval_path.delay);
  return report;
}

std::string overhead_report_text(const OverheadReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  const auto row = [&](const char* name, double base, double camo, double pct) {
    out << std::left << std::setw(8) << name << std::right << std::setw(14) << base
        << std::setw(14) << camo << std::setw(12) << pct << "\n";
  };
  out << std::left << std::setw(8) << "metric" << std::right << std::setw(14) << "baseline"
      << std::setw(14) << "camo" << std::setw(12) << "overhead%" << "\n";
  row("delay", report.baseline_delay, report.camo_delay, report.delay_overhead_pct);
  row("power", report.baseline_power, report.camo_power, report.power_overhead_pct);
  out << "min clock constraint: " << report.min_clock_constraint << "\n";
  out << "critical path (" << report.critical_path.size() << " gates):";
  for (NetId id : report.critical_path) out << ' ' << id;
  out << "\n";
  return out.str();
}

} // namespace camoforge
