#include "camoforge/camo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "camoforge/errors.hpp"
#include "camoforge/parallel.hpp"
#include "camoforge/rng.hpp"
#include "camoforge/synth.hpp"

namespace camoforge {

std::uint64_t CamoAssignment::pattern() const {
  std::uint64_t p = 0;
  for (std::size_t i = 0; i < choices.size(); ++i)
    if (choices[i] == CamoChoice::Or) p |= 1ull << i;
  return p;
}

CamoAssignment CamoAssignment::from_pattern(std::uint64_t pattern, std::size_t k) {
  CamoAssignment a;
  a.choices.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    a.choices[i] = (pattern >> i) & 1u ? CamoChoice::Or : CamoChoice::And;
  return a;
}

std::vector<bool> CamoAssignment::as_bools() const {
  std::vector<bool> v(choices.size());
  for (std::size_t i = 0; i < choices.size(); ++i) v[i] = choices[i] == CamoChoice::Or;
  return v;
}

CamoPlan select_random(const Netlist& netlist, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw ConfigError("fraction must be in [0,1], got " + std::to_string(fraction));
  const DominoReport domino = check_domino_compatible(netlist);
  if (!domino.pass)
    throw ValidationError("netlist is not domino compatible; refusing to camouflage");

  std::vector<NetId> candidates;
  for (const Gate& g : netlist.gates)
    if (g.kind == GateKind::And2 || g.kind == GateKind::Or2) candidates.push_back(g.id);
  std::sort(candidates.begin(), candidates.end());

  // Round half up, then take a shuffled prefix. The prefix makes plans
  // at growing fractions nested for a fixed (netlist, seed).
  const auto count =
      static_cast<std::size_t>(std::floor(fraction * static_cast<double>(candidates.size()) + 0.5));
  Xoshiro256StarStar rng(seed);
  rng.shuffle(candidates);
  candidates.resize(count);
  std::sort(candidates.begin(), candidates.end());

  CamoPlan plan;
  plan.selected_gate_ids = std::move(candidates);
  plan.selection_seed = seed;
  plan.fraction = fraction;
  std::map<NetId, GateKind> kind_of;
  for (const Gate& g : netlist.gates) kind_of[g.id] = g.kind;
  for (NetId id : plan.selected_gate_ids)
    plan.true_assignment.choices.push_back(kind_of[id] == GateKind::Or2 ? CamoChoice::Or
                                                                        : CamoChoice::And);
  return plan;
}

Netlist apply_camouflage(const Netlist& netlist, const CamoPlan& plan) {
  if (plan.selected_gate_ids.size() != plan.true_assignment.choices.size())
    throw ValidationError("plan has " + std::to_string(plan.selected_gate_ids.size()) +
                          " gates but " + std::to_string(plan.true_assignment.choices.size()) +
                          " true choices");
  Netlist out = netlist;
  std::map<NetId, Gate*> by_id;
  for (Gate& g : out.gates) by_id[g.id] = &g;
  for (std::size_t i = 0; i < plan.selected_gate_ids.size(); ++i) {
    const NetId id = plan.selected_gate_ids[i];
    const auto it = by_id.find(id);
    if (it == by_id.end())
      throw ValidationError("plan selects unknown gate " + std::to_string(id));
    Gate& g = *it->second;
    if (g.kind != GateKind::And2 && g.kind != GateKind::Or2)
      throw ValidationError("plan selects gate " + std::to_string(id) + " of kind " +
                            to_string(g.kind) + "; only AND2/OR2 can be camouflaged");
    const CamoChoice truth =
        g.kind == GateKind::Or2 ? CamoChoice::Or : CamoChoice::And;
    if (truth != plan.true_assignment.choices[i])
      throw ValidationError("plan's true assignment for gate " + std::to_string(id) +
                            " contradicts the netlist");
    g.kind = GateKind::Camo;
    g.vth_flavor = VthFlavor::NA;
  }
  return out;
}

Netlist resolve(const Netlist& netlist_with_camo, const CamoAssignment& assignment) {
  std::vector<Gate*> camo_gates;
  Netlist out = netlist_with_camo;
  for (Gate& g : out.gates)
    if (g.kind == GateKind::Camo) camo_gates.push_back(&g);
  std::sort(camo_gates.begin(), camo_gates.end(),
            [](const Gate* a, const Gate* b) { return a->id < b->id; });
  if (camo_gates.size() != assignment.choices.size())
    throw ValidationError("assignment has " + std::to_string(assignment.choices.size()) +
                          " choices, netlist has " + std::to_string(camo_gates.size()) +
                          " CAMO cells");
  for (std::size_t i = 0; i < camo_gates.size(); ++i) {
    const bool is_or = assignment.choices[i] == CamoChoice::Or;
    camo_gates[i]->kind = is_or ? GateKind::Or2 : GateKind::And2;
    camo_gates[i]->vth_flavor = is_or ? VthFlavor::Low : VthFlavor::High;
  }
  return out;
}

CandidateSpace enumerate_candidates(const Netlist& netlist_with_camo, SignatureMode mode,
                                    std::uint64_t seed, const CamoAssignment* true_assignment) {
  const std::size_t k = netlist_with_camo.camo_count();
  if (k > kEnumerationCap)
    throw ConfigError("candidate enumeration is capped at " + std::to_string(kEnumerationCap) +
                      " CAMO cells (netlist has " + std::to_string(k) +
                      "); use the sampled/attack workflow instead");
  if (true_assignment && true_assignment->choices.size() != k)
    throw ValidationError("true assignment length does not match CAMO cell count");

  CandidateSpace space;
  space.total_assignments = 1ull << k;
  space.mode = mode;

  std::vector<TruthSignature> sigs(space.total_assignments);
  parallel_for(space.total_assignments, [&](std::size_t pattern) {
    const auto choices = CamoAssignment::from_pattern(pattern, k).as_bools();
    sigs[pattern] = signature_with_assignment(netlist_with_camo, choices, mode, seed);
  });

  // Ascending pattern order makes the first member of each class its
  // numerically smallest representative.
  std::map<TruthSignature, std::size_t> class_of;
  for (std::uint64_t pattern = 0; pattern < space.total_assignments; ++pattern) {
    auto [it, inserted] = class_of.try_emplace(sigs[pattern], space.classes.size());
    if (inserted)
      space.classes.push_back({CamoAssignment::from_pattern(pattern, k),
                               sigs[pattern], 1});
    else
      ++space.classes[it->second].member_count;
  }
  std::sort(space.classes.begin(), space.classes.end(),
            [](const CandidateClass& a, const CandidateClass& b) {
              return a.representative.pattern() < b.representative.pattern();
            });

  if (true_assignment) {
    const auto true_sig = sigs[true_assignment->pattern()];
    for (std::size_t c = 0; c < space.classes.size(); ++c)
      if (space.classes[c].signature == true_sig) {
        space.true_class = static_cast<std::int64_t>(c);
        break;
      }
  }
  return space;
}

std::string plan_to_json(const CamoPlan& plan) {
  nlohmann::ordered_json doc;
  doc["schema"] = "camoforge-plan-v1";
  doc["seed"] = plan.selection_seed;
  doc["fraction"] = plan.fraction;
  doc["selected_gate_ids"] = plan.selected_gate_ids;
  auto& truth = doc["true_assignment"] = nlohmann::ordered_json::array();
  for (CamoChoice c : plan.true_assignment.choices)
    truth.push_back(c == CamoChoice::Or ? "OR" : "AND");
  return doc.dump(2) + "\n";
}

CamoPlan plan_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != "camoforge-plan-v1")
      throw ParseError("unsupported plan schema");
    CamoPlan plan;
    plan.selection_seed = doc.at("seed").get<std::uint64_t>();
    plan.fraction = doc.at("fraction").get<double>();
    plan.selected_gate_ids = doc.at("selected_gate_ids").get<std::vector<NetId>>();
    for (const auto& choice : doc.at("true_assignment")) {
      const auto s = choice.get<std::string>();
      if (s == "AND")
        plan.true_assignment.choices.push_back(CamoChoice::And);
      else if (s == "OR")
        plan.true_assignment.choices.push_back(CamoChoice::Or);
      else
        throw ParseError("true_assignment entries must be AND or OR");
    }
    if (plan.selected_gate_ids.size() != plan.true_assignment.choices.size())
      throw ParseError("plan gate list and true assignment differ in length");
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed plan document: ") + e.what());
  }
}

} // namespace camoforge
