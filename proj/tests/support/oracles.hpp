// Test-side oracles, deliberately independent of the library's
// evaluation paths: cube-cover evaluation of PLA tables, a recursive
// netlist evaluator, brute-force candidate partitioning and exhaustive
// path enumeration. Tests compare library results against these.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "camoforge/camo.hpp"
#include "camoforge/netlist.hpp"
#include "camoforge/pla.hpp"
#include "camoforge/rng.hpp"

namespace oracles {

using camoforge::CamoAssignment;
using camoforge::Cube;
using camoforge::Gate;
using camoforge::GateKind;
using camoforge::Netlist;
using camoforge::NetId;
using camoforge::PlaTable;

/// Direct cube-cover evaluation: output j is 1 iff some cube asserting
/// j matches the input.
inline std::vector<bool> eval_pla(const PlaTable& table, const std::vector<bool>& input) {
  std::vector<bool> out(table.num_outputs, false);
  for (const Cube& cube : table.cubes) {
    bool match = true;
    for (std::size_t i = 0; i < table.num_inputs && match; ++i) {
      if (cube.inputs[i] == '-') continue;
      match = (cube.inputs[i] == '1') == input[i];
    }
    if (!match) continue;
    for (std::size_t j = 0; j < table.num_outputs; ++j)
      if (cube.outputs[j] == '1') out[j] = true;
  }
  return out;
}

inline std::vector<bool> index_to_vector(std::uint64_t v, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (v >> i) & 1u;
  return bits;
}

/// Full truth table of a PLA, one bool-vector per output, indexed by
/// input vector value.
inline std::vector<std::vector<bool>> pla_truth_table(const PlaTable& table) {
  const std::uint64_t n_vectors = 1ull << table.num_inputs;
  std::vector<std::vector<bool>> tt(table.num_outputs, std::vector<bool>(n_vectors));
  for (std::uint64_t v = 0; v < n_vectors; ++v) {
    const auto out = eval_pla(table, index_to_vector(v, table.num_inputs));
    for (std::size_t j = 0; j < table.num_outputs; ++j) tt[j][v] = out[j];
  }
  return tt;
}

/// Recursive (memoized DFS) netlist evaluation; CAMO cells resolve
/// through `camo_choice` (index in ascending gate-id order).
inline std::vector<bool> eval_netlist_recursive(const Netlist& netlist,
                                                const std::vector<bool>& input,
                                                const std::vector<bool>& camo_choices = {}) {
  std::map<NetId, const Gate*> gate_of;
  std::vector<NetId> camo_ids;
  for (const Gate& g : netlist.gates) {
    gate_of[g.id] = &g;
    if (g.kind == GateKind::Camo) camo_ids.push_back(g.id);
  }
  std::sort(camo_ids.begin(), camo_ids.end());
  std::map<NetId, std::size_t> camo_index;
  for (std::size_t i = 0; i < camo_ids.size(); ++i) camo_index[camo_ids[i]] = i;

  std::map<NetId, bool> memo;
  std::function<bool(NetId)> eval = [&](NetId net) -> bool {
    if (net < netlist.inputs.size()) return input[net];
    if (const auto it = memo.find(net); it != memo.end()) return it->second;
    const Gate& g = *gate_of.at(net);
    bool value = false;
    switch (g.kind) {
      case GateKind::And2: value = eval(g.fanin[0]) && eval(g.fanin[1]); break;
      case GateKind::Or2: value = eval(g.fanin[0]) || eval(g.fanin[1]); break;
      case GateKind::Inv: value = !eval(g.fanin[0]); break;
      case GateKind::Const0: value = false; break;
      case GateKind::Const1: value = true; break;
      case GateKind::Camo: {
        const bool as_or = camo_choices.at(camo_index.at(net));
        value = as_or ? (eval(g.fanin[0]) || eval(g.fanin[1]))
                      : (eval(g.fanin[0]) && eval(g.fanin[1]));
        break;
      }
    }
    memo[net] = value;
    return value;
  };

  std::vector<bool> out;
  out.reserve(netlist.outputs.size());
  for (NetId net : netlist.outputs) out.push_back(eval(net));
  return out;
}

/// Full truth table of a netlist via the recursive evaluator.
inline std::vector<std::vector<bool>> netlist_truth_table(const Netlist& netlist,
                                                          const std::vector<bool>& camoic = {}) {
  const std::uint64_t n_vectors = 1ull << netlist.inputs.size();
  std::vector<std::vector<bool>> tt(netlist.outputs.size(), std::vector<bool>(n_vectors));
  for (std::uint64_t v = 0; v < n_vectors; ++v) {
    const auto out = eval_netlist_recursive(netlist, index_to_vector(v, netlist.inputs.size()), camoic);
    for (std::size_t j = 0; j < netlist.outputs.size(); ++j) tt[j][v] = out[j];
  }
  return tt;
}

/// Brute-force partition of all 2^k assignments into functional
/// equivalence classes by pairwise table comparison.
inline std::vector<std::vector<std::uint64_t>> brute_force_classes(const Netlist& camo_netlist) {
  const std::size_t k = camo_netlist.camo_count();
  std::vector<std::vector<std::uint64_t>> classes;
  std::vector<std::vector<std::vector<bool>>> tables;
  for (std::uint64_t pattern = 0; pattern < (1ull << k); ++pattern) {
    const auto choices = CamoAssignment::from_pattern(pattern, k).as_bools();
    const auto table = netlist_truth_table(camo_netlist, choices);
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      if (tables[c] == table) {
        classes[c].push_back(pattern);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({pattern});
      tables.push_back(table);
    }
  }
  return classes;
}

/// Exhaustive path enumeration (small netlists only): the maximum
/// total gate delay over every input-to-output path.
inline double longest_path_bruteforce(const Netlist& netlist,
                                      const std::function<double(const Gate&)>& delay) {
  std::map<NetId, const Gate*> gate_of;
  for (const Gate& g : netlist.gates) gate_of[g.id] = &g;
  std::function<double(NetId)> walk = [&](NetId net) -> double {
    if (net < netlist.inputs.size()) return 0.0;
    const Gate& g = *gate_of.at(net);
    double best = 0.0;
    for (NetId fanin : g.fanin) best = std::max(best, walk(fanin));
    return best + delay(g);
  };
  double best = 0.0;
  for (NetId net : netlist.outputs) best = std::max(best, walk(net));
  return best;
}

/// Seeded random PLA: every cube asserts at least one output and, when
/// min_literals > 0, constrains how specific cubes are.
inline PlaTable random_pla(camoforge::Xoshiro256StarStar& rng, std::size_t n_in,
                           std::size_t n_out, std::size_t n_cubes, unsigned dash_pct = 30,
                           std::size_t min_literals = 0) {
  PlaTable table;
  table.num_inputs = n_in;
  table.num_outputs = n_out;
  for (std::size_t i = 0; i < n_in; ++i) table.input_labels.push_back("in" + std::to_string(i));
  for (std::size_t j = 0; j < n_out; ++j) table.output_labels.push_back("out" + std::to_string(j));
  for (std::size_t c = 0; c < n_cubes; ++c) {
    Cube cube;
    for (;;) {
      cube.inputs.clear();
      for (std::size_t i = 0; i < n_in; ++i) {
        if (rng.bounded(100) < dash_pct)
          cube.inputs.push_back('-');
        else
          cube.inputs.push_back(rng.bounded(2) ? '1' : '0');
      }
      const auto literals = n_in - static_cast<std::size_t>(
                                       std::count(cube.inputs.begin(), cube.inputs.end(), '-'));
      if (literals >= min_literals) break;
    }
    cube.outputs.clear();
    for (std::size_t j = 0; j < n_out; ++j) cube.outputs.push_back(rng.bounded(2) ? '1' : '0');
    if (cube.outputs.find('1') == std::string::npos)
      cube.outputs[rng.bounded(n_out)] = '1';
    table.cubes.push_back(std::move(cube));
  }
  table.declared_terms = table.cubes.size();
  return table;
}

/// The two-camouflaged-cell demo netlist over inputs A, B, C:
/// inv(B), g4 = A&B (camouflaged), g5 = g4&C, g6 = ~B&C,
/// g7 = g5|g6 (camouflaged), output g7.
/// Resolving the two CAMO cells yields four distinct functions.
inline Netlist two_camo_demo() {
  Netlist n;
  n.inputs = {0, 1, 2}; // A, B, C
  n.gates.push_back({3, GateKind::Inv, {1}, camoforge::VthFlavor::NA});
  n.gates.push_back({4, GateKind::Camo, {0, 1}, camoforge::VthFlavor::NA}); // truly AND
  n.gates.push_back({5, GateKind::And2, {4, 2}, camoforge::VthFlavor::High});
  n.gates.push_back({6, GateKind::And2, {3, 2}, camoforge::VthFlavor::High});
  n.gates.push_back({7, GateKind::Camo, {5, 6}, camoforge::VthFlavor::NA}); // truly OR
  n.outputs = {7};
  return n;
}

} // namespace oracles
