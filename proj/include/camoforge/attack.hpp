#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "camoforge/camo.hpp"
#include "camoforge/netlist.hpp"

namespace camoforge {

/// Black-box access to the true circuit: any input vector in, the true
/// outputs back.
using Oracle = std::function<std::vector<bool>(const std::vector<bool>&)>;

Oracle make_netlist_oracle(const Netlist& truth);

enum class AttackMode { Exhaustive, Sampled };
enum class AttackStatus { Running, Resolved, Ambiguous };

/// Live assignments start at all 2^k; explicit enumeration is capped
/// here (the cells hide one bit each, so the set doubles per cell).
inline constexpr std::size_t kAttackCamoCap = 20;
inline constexpr std::size_t kExhaustiveSearchInputCap = 20;
inline constexpr std::uint64_t kDefaultSampleBudget = 1'000'000;

struct AttackQuery {
  std::vector<bool> input;
  std::vector<bool> response;
  std::uint64_t live_before = 0;
  std::uint64_t live_after = 0;
};

struct AttackState {
  AttackStatus status = AttackStatus::Running;
  std::vector<std::uint64_t> live; // assignment patterns, ascending
  std::vector<AttackQuery> queries;
  std::uint64_t vectors_examined = 0;
  std::string diagnostics;
};

struct AttackOptions {
  AttackMode mode = AttackMode::Exhaustive;
  std::uint64_t seed = 0;                            // sampled search only
  std::uint64_t sample_budget = kDefaultSampleBudget; // vectors per search
};

/// Searches for an input on which at least two live assignments
/// disagree. Exhaustive mode scans all 2^n vectors in counting order
/// (inputs <= kExhaustiveSearchInputCap); sampled mode draws seeded
/// random vectors up to the budget. Returns the first hit, or nullopt
/// when none was found (a proof of equivalence only in exhaustive
/// mode). Requires |live| >= 2.
std::optional<std::vector<bool>> find_discriminating_input(const Netlist& camo_netlist,
                                                           const std::vector<std::uint64_t>& live,
                                                           const AttackOptions& options,
                                                           std::uint64_t* vectors_examined = nullptr);

/// Oracle-guided pruning loop: find a discriminating input, query the
/// oracle, drop every assignment that disagrees, repeat. Ends RESOLVED
/// when the live set is proven to be a single functional class
/// (exhaustive mode) or collapses to one assignment; AMBIGUOUS when the
/// sampled search exhausts its budget first. The truth is never pruned:
/// it always agrees with the oracle.
AttackState run_attack(const Netlist& camo_netlist, const Oracle& oracle,
                       const AttackOptions& options = {});

} // namespace camoforge
