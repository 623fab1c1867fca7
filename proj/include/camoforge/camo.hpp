#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "camoforge/netlist.hpp"
#include "camoforge/signature.hpp"

namespace camoforge {

/// Full candidate enumeration is capped at this many CAMO cells; larger
/// spaces are explored through the attack engine instead.
inline constexpr std::size_t kEnumerationCap = 16;

enum class CamoChoice : std::uint8_t { And = 0, Or = 1 };

/// One resolution of every CAMO cell: choices[i] belongs to the i-th
/// CAMO cell in ascending gate-id order. As a bit pattern, bit i = 1
/// means OR (so the all-AND assignment is pattern 0).
struct CamoAssignment {
  std::vector<CamoChoice> choices;

  std::uint64_t pattern() const;
  static CamoAssignment from_pattern(std::uint64_t pattern, std::size_t k);
  std::vector<bool> as_bools() const;

  bool operator==(const CamoAssignment&) const = default;
};

/// Which gates were camouflaged and what they really are. Selection is
/// reproducible from (netlist, fraction, seed) alone.
struct CamoPlan {
  std::vector<NetId> selected_gate_ids; // ascending
  CamoAssignment true_assignment;       // original kind of each selected gate
  std::uint64_t selection_seed = 0;
  double fraction = 0.0;

  bool operator==(const CamoPlan&) const = default;
};

/// Picks round(fraction * #(AND2+OR2)) gates uniformly without
/// replacement (seeded Fisher-Yates prefix, round half up). For a fixed
/// netlist and seed, selections are nested across fractions: a smaller
/// fraction's gates are a subset of a larger one's. Requires a
/// domino-compatible netlist and fraction in [0,1].
CamoPlan select_random(const Netlist& netlist, double fraction, std::uint64_t seed);

/// Replaces the plan's gates with CAMO cells (fan-ins kept, flavor NA).
/// Throws ValidationError if the plan does not match the netlist.
Netlist apply_camouflage(const Netlist& netlist, const CamoPlan& plan);

/// Resolves every CAMO cell to the assignment's AND2/OR2 (flavors
/// reassigned). Throws ValidationError on length mismatch.
Netlist resolve(const Netlist& netlist_with_camo, const CamoAssignment& assignment);

/// One functional equivalence class of assignments.
struct CandidateClass {
  CamoAssignment representative; // numerically smallest member pattern
  TruthSignature signature;
  std::uint64_t member_count = 0;
};

struct CandidateSpace {
  std::uint64_t total_assignments = 0; // 2^k
  std::vector<CandidateClass> classes; // ascending representative pattern
  SignatureMode mode = SignatureMode::Exhaustive;
  std::int64_t true_class = -1; // index, or -1 when the true assignment is unknown
};

/// Iterates all 2^k assignments and groups them by signature. With
/// EXHAUSTIVE signatures the grouping is exact functional equivalence;
/// with SAMPLED it is probabilistic and reported as such. k above
/// kEnumerationCap raises ConfigError (use the attack workflow).
CandidateSpace enumerate_candidates(const Netlist& netlist_with_camo, SignatureMode mode,
                                    std::uint64_t seed = 0,
                                    const CamoAssignment* true_assignment = nullptr);

/// Plan file round-trip, schema "camoforge-plan-v1".
std::string plan_to_json(const CamoPlan& plan);
CamoPlan plan_from_json(const std::string& text);

} // namespace camoforge
