#include "camoforge/signature.hpp"

#include <algorithm>
#include <tuple>

#include "camoforge/errors.hpp"
#include "camoforge/parallel.hpp"
#include "camoforge/rng.hpp"

namespace camoforge {

bool TruthSignature::operator<(const TruthSignature& rhs) const {
  return std::tie(mode, num_inputs, sample_seed, sample_count, words) <
         std::tie(rhs.mode, rhs.num_inputs, rhs.sample_seed, rhs.sample_count, rhs.words);
}

namespace detail {

BlockSimulator::BlockSimulator(const Netlist& netlist, const std::vector<bool>* camo_choices)
    : netlist_(netlist), topo_(netlist.topological_order()) {
  effective_kind_.reserve(netlist.gates.size());
  for (const Gate& g : netlist.gates) effective_kind_.push_back(g.kind);
  if (!camo_choices) return;

  // CAMO cells are indexed in ascending gate-id order.
  std::vector<std::size_t> camo_gates;
  for (std::size_t gi = 0; gi < netlist.gates.size(); ++gi)
    if (netlist.gates[gi].kind == GateKind::Camo) camo_gates.push_back(gi);
  std::sort(camo_gates.begin(), camo_gates.end(), [&](std::size_t a, std::size_t b) {
    return netlist.gates[a].id < netlist.gates[b].id;
  });
  if (camo_gates.size() != camo_choices->size())
    throw EvalError("camo assignment has " + std::to_string(camo_choices->size()) +
                    " choices, netlist has " + std::to_string(camo_gates.size()) + " CAMO cells");
  for (std::size_t i = 0; i < camo_gates.size(); ++i)
    effective_kind_[camo_gates[i]] = (*camo_choices)[i] ? GateKind::Or2 : GateKind::And2;
}

std::vector<std::uint64_t> BlockSimulator::eval_counting_block(std::uint64_t block) const {
  // Lane b of the block holds input vector v = block*64 + b; input i of
  // v is bit i of v. For i < 6 the lane pattern is a fixed mask, above
  // that it is constant within the block.
  static constexpr std::uint64_t kLowMasks[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  std::vector<std::uint64_t> input_words(netlist_.inputs.size());
  for (std::size_t i = 0; i < input_words.size(); ++i) {
    if (i < 6)
      input_words[i] = kLowMasks[i];
    else
      input_words[i] = ((block >> (i - 6)) & 1u) ? ~0ull : 0ull;
  }
  return eval_words(input_words);
}

std::vector<std::uint64_t> BlockSimulator::eval_words(
    const std::vector<std::uint64_t>& input_words) const {
  std::vector<std::uint64_t> value(netlist_.num_nets(), 0);
  for (std::size_t i = 0; i < input_words.size(); ++i) value[i] = input_words[i];

  for (std::size_t gi : topo_) {
    const Gate& g = netlist_.gates[gi];
    switch (effective_kind_[gi]) {
      case GateKind::And2: value[g.id] = value[g.fanin[0]] & value[g.fanin[1]]; break;
      case GateKind::Or2: value[g.id] = value[g.fanin[0]] | value[g.fanin[1]]; break;
      case GateKind::Inv: value[g.id] = ~value[g.fanin[0]]; break;
      case GateKind::Const0: value[g.id] = 0; break;
      case GateKind::Const1: value[g.id] = ~0ull; break;
      case GateKind::Camo:
        throw EvalError("unresolved CAMO gate " + std::to_string(g.id) +
                        "; resolve an assignment first");
    }
  }

  std::vector<std::uint64_t> out;
  out.reserve(netlist_.outputs.size());
  for (NetId net : netlist_.outputs) out.push_back(value[net]);
  return out;
}

} // namespace detail

namespace {

TruthSignature signature_impl(const Netlist& netlist, SignatureMode mode, std::uint64_t seed,
                              std::size_t sample_count, const std::vector<bool>* choices) {
  const std::size_t n = netlist.inputs.size();
  const std::size_t n_out = netlist.outputs.size();
  detail::BlockSimulator sim(netlist, choices);

  TruthSignature sig;
  sig.mode = mode;
  sig.num_inputs = n;

  if (mode == SignatureMode::Exhaustive) {
    if (n > kExhaustiveInputCap)
      throw ConfigError("exhaustive signature needs <= " + std::to_string(kExhaustiveInputCap) +
                        " inputs, netlist has " + std::to_string(n) +
                        "; use sampled signatures instead");
    const std::uint64_t n_vectors = 1ull << n;
    const std::size_t n_blocks = static_cast<std::size_t>((n_vectors + 63) / 64);
    sig.words.assign(n_out, std::vector<std::uint64_t>(n_blocks, 0));
    // Tail mask for n < 6 (fewer than 64 vectors in the only block).
    const std::uint64_t tail_mask = n >= 6 ? ~0ull : (1ull << n_vectors) - 1;
    parallel_for(n_blocks, [&](std::size_t block) {
      const auto words = sim.eval_counting_block(block);
      for (std::size_t j = 0; j < n_out; ++j) sig.words[j][block] = words[j] & tail_mask;
    });
  } else {
    if (sample_count == 0)
      throw ConfigError("sampled signature needs a sample count >= 1");
    sig.sample_seed = seed;
    sig.sample_count = sample_count;
    const std::size_t n_blocks = (sample_count + 63) / 64;
    sig.words.assign(n_out, std::vector<std::uint64_t>(n_blocks, 0));
    // Vector j is drawn as ceil(n/64) words from the stream; lanes are
    // transposed per block so draw order depends only on the seed.
    Xoshiro256StarStar rng(seed);
    std::vector<std::vector<std::uint64_t>> block_inputs(
        n_blocks, std::vector<std::uint64_t>(n, 0));
    for (std::size_t v = 0; v < sample_count; ++v) {
      const std::size_t block = v / 64, lane = v % 64;
      std::uint64_t word = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = rng.next();
        if ((word >> (i % 64)) & 1u) block_inputs[block][i] |= 1ull << lane;
      }
    }
    const std::uint64_t tail_lanes = sample_count % 64;
    parallel_for(n_blocks, [&](std::size_t block) {
      const auto words = sim.eval_words(block_inputs[block]);
      const bool last = block + 1 == n_blocks;
      const std::uint64_t mask =
          (last && tail_lanes) ? ((1ull << tail_lanes) - 1) : ~0ull;
      for (std::size_t j = 0; j < n_out; ++j) sig.words[j][block] = words[j] & mask;
    });
  }
  return sig;
}

} // namespace

TruthSignature signature(const Netlist& netlist, SignatureMode mode, std::uint64_t seed,
                         std::size_t sample_count) {
  return signature_impl(netlist, mode, seed, sample_count, nullptr);
}

TruthSignature signature_with_assignment(const Netlist& netlist, const std::vector<bool>& choices,
                                         SignatureMode mode, std::uint64_t seed,
                                         std::size_t sample_count) {
  return signature_impl(netlist, mode, seed, sample_count, &choices);
}

} // namespace camoforge
