#include "bitsim.hpp"

namespace rev::detail {

void simulate_block(const Circuit& c, std::vector<std::uint64_t>& wires) {
  for (const Gate& g : c.gates()) {
    if (g.kind() == GateKind::Fredkin) {
      std::uint64_t diff =
          (wires[g.target_a()] ^ wires[g.target_b()]) & wires[g.control()];
      wires[g.target_a()] ^= diff;
      wires[g.target_b()] ^= diff;
    } else {
      wires[g.target()] ^= wires[g.control_1()] & wires[g.control_2()];
    }
  }
}

namespace {

// kLowBit[p] has bit j set iff bit p of j is set, for j in 0..63.
constexpr std::uint64_t kLowBit[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

void fill_exhaustive_block(std::vector<std::uint64_t>& wires, unsigned width,
                           unsigned index_bits, std::uint64_t base) {
  for (unsigned w = 0; w < width; ++w) {
    if (w >= index_bits) {
      wires[w] = 0;
      continue;
    }
    unsigned bit = index_bits - 1 - w;
    if (bit < 6)
      wires[w] = kLowBit[bit];
    else
      wires[w] = (base >> bit) & 1 ? ~0ull : 0ull;
  }
}

std::uint64_t block_lane_mask(std::uint64_t base, std::uint64_t total) {
  if (total - base >= 64) return ~0ull;
  return (std::uint64_t{1} << (total - base)) - 1;
}

}  // namespace rev::detail
