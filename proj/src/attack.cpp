#include "camoforge/attack.hpp"

#include <algorithm>
#include <bit>

#include "camoforge/errors.hpp"
#include "camoforge/rng.hpp"
#include "camoforge/signature.hpp"

namespace camoforge {

namespace {

std::vector<bool> vector_from_index(std::uint64_t v, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (v >> i) & 1u;
  return bits;
}

/// Single-vector evaluation with CAMO cells resolved on the fly
/// (broadcast the vector into all 64 lanes, read lane 0).
std::vector<bool> evaluate_assignment(const Netlist& camo_netlist, std::uint64_t pattern,
                                      std::size_t k, const std::vector<bool>& input) {
  const auto choices = CamoAssignment::from_pattern(pattern, k).as_bools();
  detail::BlockSimulator sim(camo_netlist, &choices);
  std::vector<std::uint64_t> words(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) words[i] = input[i] ? ~0ull : 0ull;
  const auto out_words = sim.eval_words(words);
  std::vector<bool> out(out_words.size());
  for (std::size_t j = 0; j < out_words.size(); ++j) out[j] = out_words[j] & 1u;
  return out;
}

} // namespace

Oracle make_netlist_oracle(const Netlist& truth) {
  return [&truth](const std::vector<bool>& input) { return evaluate(truth, input); };
}

std::optional<std::vector<bool>> find_discriminating_input(const Netlist& camo_netlist,
                                                           const std::vector<std::uint64_t>& live,
                                                           const AttackOptions& options,
                                                           std::uint64_t* vectors_examined) {
  if (live.size() < 2)
    throw ConfigError("discriminating-input search needs at least two live assignments");
  const std::size_t n = camo_netlist.inputs.size();
  const std::size_t k = camo_netlist.camo_count();

  // One block simulator per live assignment; lane-parallel comparison
  // against the first assignment spots any disagreement in a block.
  std::vector<detail::BlockSimulator> sims;
  std::vector<std::vector<bool>> choice_store;
  sims.reserve(live.size());
  choice_store.reserve(live.size());
  for (std::uint64_t pattern : live)
    choice_store.push_back(CamoAssignment::from_pattern(pattern, k).as_bools());
  for (std::size_t i = 0; i < live.size(); ++i)
    sims.emplace_back(camo_netlist, &choice_store[i]);

  std::uint64_t examined = 0;
  const auto scan_block = [&](const std::vector<std::uint64_t>& ref_words,
                              const std::vector<std::uint64_t>& words) -> std::uint64_t {
    std::uint64_t diff = 0;
    for (std::size_t j = 0; j < ref_words.size(); ++j) diff |= ref_words[j] ^ words[j];
    return diff;
  };

  if (options.mode == AttackMode::Exhaustive) {
    if (n > kExhaustiveSearchInputCap)
      throw ConfigError("exhaustive vector search needs <= " +
                        std::to_string(kExhaustiveSearchInputCap) + " inputs, netlist has " +
                        std::to_string(n));
    const std::uint64_t n_vectors = 1ull << n;
    const std::uint64_t n_blocks = (n_vectors + 63) / 64;
    const std::uint64_t lane_mask = n >= 6 ? ~0ull : (1ull << n_vectors) - 1;
    for (std::uint64_t block = 0; block < n_blocks; ++block) {
      const auto ref = sims[0].eval_counting_block(block);
      std::uint64_t diff = 0;
      for (std::size_t s = 1; s < sims.size() && !diff; ++s)
        diff = scan_block(ref, sims[s].eval_counting_block(block)) & lane_mask;
      // Count the whole block once scanned.
      examined += std::min<std::uint64_t>(64, n_vectors - block * 64);
      if (diff) {
        const auto lane = static_cast<std::uint64_t>(std::countr_zero(diff));
        if (vectors_examined) *vectors_examined = examined;
        return vector_from_index(block * 64 + lane, n);
      }
    }
    if (vectors_examined) *vectors_examined = examined;
    return std::nullopt;
  }

  // Sampled: seeded random vectors, evaluated 64 lanes at a time.
  Xoshiro256StarStar rng(options.seed);
  while (examined < options.sample_budget) {
    const std::uint64_t lanes =
        std::min<std::uint64_t>(64, options.sample_budget - examined);
    std::vector<std::vector<bool>> lane_vectors(lanes);
    std::vector<std::uint64_t> input_words(n, 0);
    for (std::uint64_t lane = 0; lane < lanes; ++lane) {
      lane_vectors[lane] = rng.bits(n);
      for (std::size_t i = 0; i < n; ++i)
        if (lane_vectors[lane][i]) input_words[i] |= 1ull << lane;
    }
    const std::uint64_t lane_mask = lanes == 64 ? ~0ull : (1ull << lanes) - 1;
    const auto ref = sims[0].eval_words(input_words);
    std::uint64_t diff = 0;
    for (std::size_t s = 1; s < sims.size() && !diff; ++s)
      diff = scan_block(ref, sims[s].eval_words(input_words)) & lane_mask;
    examined += lanes;
    if (diff) {
      const auto lane = static_cast<std::uint64_t>(std::countr_zero(diff));
      if (vectors_examined) *vectors_examined = examined;
      return lane_vectors[lane];
    }
  }
  if (vectors_examined) *vectors_examined = examined;
  return std::nullopt;
}

AttackState run_attack(const Netlist& camo_netlist, const Oracle& oracle,
                       const AttackOptions& options) {
  const std::size_t k = camo_netlist.camo_count();
  if (k > kAttackCamoCap)
    throw ConfigError("explicit-enumeration attack is capped at " +
                      std::to_string(kAttackCamoCap) + " CAMO cells (netlist has " +
                      std::to_string(k) + ")");

  AttackState state;
  state.live.resize(1ull << k);
  for (std::uint64_t p = 0; p < state.live.size(); ++p) state.live[p] = p;

  for (;;) {
    if (state.live.size() <= 1) {
      state.status = AttackStatus::Resolved;
      return state;
    }
    std::uint64_t examined = 0;
    const auto vector =
        find_discriminating_input(camo_netlist, state.live, options, &examined);
    state.vectors_examined += examined;
    if (!vector) {
      if (options.mode == AttackMode::Exhaustive) {
        // No distinguishing vector exists: the survivors are one
        // functional class.
        state.status = AttackStatus::Resolved;
      } else {
        state.status = AttackStatus::Ambiguous;
        state.diagnostics = "sampled search exhausted its budget of " +
                            std::to_string(options.sample_budget) + " vectors with " +
                            std::to_string(state.live.size()) + " live assignments";
      }
      return state;
    }

    AttackQuery query;
    query.input = *vector;
    query.response = oracle(*vector);
    query.live_before = state.live.size();

    std::vector<std::uint64_t> survivors;
    survivors.reserve(state.live.size());
    for (std::uint64_t pattern : state.live)
      if (evaluate_assignment(camo_netlist, pattern, k, *vector) == query.response)
        survivors.push_back(pattern);
    state.live = std::move(survivors);
    query.live_after = state.live.size();
    state.queries.push_back(std::move(query));

    if (state.live.empty())
      throw Error("oracle disagreed with every live assignment; the oracle does not "
                  "match the camouflaged netlist");
  }
}

} // namespace camoforge
