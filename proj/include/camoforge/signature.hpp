#pragma once

#include <cstdint>
#include <vector>

#include "camoforge/netlist.hpp"

namespace camoforge {

enum class SignatureMode { Exhaustive, Sampled };

/// Inputs above this count cannot be exhausted; callers fall back to
/// SAMPLED signatures, whose equality is probabilistic only.
inline constexpr std::size_t kExhaustiveInputCap = 20;
inline constexpr std::size_t kDefaultSampleCount = 4096;

/// Functional fingerprint of a multi-output netlist. EXHAUSTIVE packs
/// the value of every input vector (bit v of words[j] = output j on
/// input v, input i = bit i of v). SAMPLED packs sample_count seeded
/// random vectors instead.
struct TruthSignature {
  SignatureMode mode = SignatureMode::Exhaustive;
  std::size_t num_inputs = 0;
  std::vector<std::vector<std::uint64_t>> words; // one bit-vector per output
  std::uint64_t sample_seed = 0;                 // SAMPLED only
  std::size_t sample_count = 0;                  // SAMPLED only

  bool operator==(const TruthSignature&) const = default;
  bool operator<(const TruthSignature& rhs) const;
};

/// Computes the signature of a CAMO-free netlist. EXHAUSTIVE requires
/// num_inputs <= kExhaustiveInputCap (ConfigError otherwise). Results
/// are deterministic for a given (netlist, mode, seed) at any thread
/// count. Throws EvalError on unresolved CAMO cells.
TruthSignature signature(const Netlist& netlist, SignatureMode mode,
                         std::uint64_t seed = 0,
                         std::size_t sample_count = kDefaultSampleCount);

/// Same, but CAMO cells are resolved on the fly: choices[i] selects OR
/// (true) or AND (false) for the i-th CAMO cell in ascending gate-id
/// order. Avoids materializing a resolved netlist per assignment.
TruthSignature signature_with_assignment(const Netlist& netlist,
                                         const std::vector<bool>& choices, SignatureMode mode,
                                         std::uint64_t seed = 0,
                                         std::size_t sample_count = kDefaultSampleCount);

namespace detail {

/// Bit-parallel evaluation of 64 consecutive-or-sampled vectors at a
/// time. `resolve_camo`, when non-null, maps the i-th CAMO cell (in
/// ascending gate-id order) to AND (false) or OR (true).
class BlockSimulator {
 public:
  explicit BlockSimulator(const Netlist& netlist, const std::vector<bool>* camo_choices = nullptr);

  /// Evaluates vectors [block*64, block*64+64) in counting order.
  /// Returns one word per output.
  std::vector<std::uint64_t> eval_counting_block(std::uint64_t block) const;

  /// Evaluates 64 caller-provided input words (inputs[i] = lane bits of
  /// input i). Returns one word per output.
  std::vector<std::uint64_t> eval_words(const std::vector<std::uint64_t>& input_words) const;

 private:
  const Netlist& netlist_;
  std::vector<std::size_t> topo_;
  std::vector<GateKind> effective_kind_; // CAMO resolved if choices given
};

} // namespace detail

} // namespace camoforge
