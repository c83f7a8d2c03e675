#pragma once

// Internal 64-lane bit-parallel simulation: word w holds wire w's value
// across 64 inputs at once, input j in bit j of every word.

#include <cstdint>
#include <vector>

#include "revequiv/circuit.hpp"

namespace rev::detail {

// Applies every gate of c to all 64 lanes in place. wires.size() must be
// c.width().
void simulate_block(const Circuit& c, std::vector<std::uint64_t>& wires);

// Loads the 64 consecutive inputs base..base+63 of an exhaustive sweep
// over index_bits-bit indices: wire w < index_bits receives index bit
// (index_bits - 1 - w), so wire 0 is the most significant; wires >=
// index_bits receive 0. base must be a multiple of 64.
void fill_exhaustive_block(std::vector<std::uint64_t>& wires, unsigned width,
                           unsigned index_bits, std::uint64_t base);

// Mask of lanes whose input index is below `total` (all-ones when the
// whole block is in range).
std::uint64_t block_lane_mask(std::uint64_t base, std::uint64_t total);

}  // namespace rev::detail
