#include "revequiv/equiv.hpp"

#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "bitsim.hpp"
#include "revequiv/errors.hpp"

namespace rev {

namespace {

constexpr std::uint64_t kNoDifference = std::numeric_limits<std::uint64_t>::max();

// Counter-based generator (splitmix-style finalizer): word k of a stream
// is a pure function of (seed, k), so trials are reproducible and
// order-independent.
std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t stream_word(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * 0x9e3779b97f4a7c15ull);
}

struct SweepPlan {
  const Circuit* c1;
  const Circuit* c2;
  // Inputs range over the first index_bits wires (wire 0 the most
  // significant bit of the index); the rest start at 0. Only the first
  // compare_wires output wires are compared.
  unsigned index_bits;
  unsigned compare_wires;
  unsigned jobs;
};

// Smallest input index on which the compared outputs differ, or
// kNoDifference. The sweep is chunked over an atomic claim counter and
// merged with an atomic minimum, so the result does not depend on the
// worker count: each worker scans its chunk in ascending order, keeps
// only the chunk's first difference, and chunks wholly above the current
// minimum are skipped, which can never skip a smaller index.
std::uint64_t sweep_first_difference(const SweepPlan& plan) {
  const unsigned width = plan.c1->width();
  const std::uint64_t total = std::uint64_t{1} << plan.index_bits;
  const std::uint64_t num_blocks = (total + 63) / 64;
  const std::uint64_t chunk =
      std::max<std::uint64_t>(1, num_blocks / (8 * std::max(1u, plan.jobs)));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNoDifference};

  auto worker = [&] {
    std::vector<std::uint64_t> input(width), out1, out2;
    for (;;) {
      std::uint64_t b0 = next.fetch_add(chunk, std::memory_order_relaxed);
      if (b0 >= num_blocks) return;
      std::uint64_t b_end = std::min(b0 + chunk, num_blocks);
      for (std::uint64_t b = b0; b < b_end; ++b) {
        std::uint64_t base = b * 64;
        if (base >= best.load(std::memory_order_relaxed)) break;
        detail::fill_exhaustive_block(input, width, plan.index_bits, base);
        out1 = input;
        out2 = input;
        detail::simulate_block(*plan.c1, out1);
        detail::simulate_block(*plan.c2, out2);
        std::uint64_t diff = 0;
        for (unsigned w = 0; w < plan.compare_wires; ++w)
          diff |= out1[w] ^ out2[w];
        diff &= detail::block_lane_mask(base, total);
        if (diff) {
          std::uint64_t found = base + std::countr_zero(diff);
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (found < cur &&
                 !best.compare_exchange_weak(cur, found,
                                             std::memory_order_relaxed)) {
          }
          break;  // ascending scan: nothing earlier left in this chunk
        }
      }
    }
  };

  if (plan.jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(plan.jobs);
    for (unsigned j = 0; j < plan.jobs; ++j) workers.emplace_back(worker);
  }
  return best.load();
}

// Builds the full-width input whose first index_bits wires spell `index`
// (wire 0 most significant) and whose remaining wires are 0.
BitState input_from_index(unsigned width, unsigned index_bits,
                          std::uint64_t index) {
  BitState s(width);
  for (unsigned w = 0; w < index_bits; ++w)
    s.set_bit(w, (index >> (index_bits - 1 - w)) & 1);
  return s;
}

// Random full-width input; the first random_bits wires are sampled, the
// rest stay 0.
BitState random_input(unsigned width, unsigned random_bits, std::uint64_t seed,
                      std::uint64_t trial) {
  BitState s(width);
  const std::uint64_t words = (random_bits + 63) / 64;
  for (std::uint64_t k = 0; k < words; ++k) {
    std::uint64_t word = stream_word(seed, trial * words + k);
    for (unsigned b = 0; b < 64; ++b) {
      std::uint64_t w = k * 64 + b;
      if (w >= random_bits) break;
      s.set_bit(w, (word >> b) & 1);
    }
  }
  return s;
}

// Every returned witness is re-simulated; a checker bug must never
// surface as a bogus counterexample.
void confirm_witness(const Circuit& c1, const Circuit& c2,
                     const BitState& witness, unsigned compare_wires) {
  BitState o1 = simulate(c1, witness);
  BitState o2 = simulate(c2, witness);
  for (unsigned w = 0; w < compare_wires; ++w)
    if (o1.bit(w) != o2.bit(w)) return;
  throw Error("internal: witness does not separate the circuits");
}

EquivVerdict check(const Circuit& c1, const Circuit& c2, unsigned index_bits,
                   unsigned compare_wires, const CheckMode& mode) {
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    if (index_bits > ex->width_limit)
      throw LimitExceededError("exhaustive sweep over " +
                               std::to_string(index_bits) +
                               " wires exceeds the width limit of " +
                               std::to_string(ex->width_limit));
    if (index_bits > 63)
      throw LimitExceededError("exhaustive sweep supports at most 63 wires");

    std::uint64_t first = sweep_first_difference(
        {&c1, &c2, index_bits, compare_wires, ex->jobs});
    if (first == kNoDifference) return {Outcome::Equivalent, std::nullopt, 0};

    BitState witness = input_from_index(c1.width(), index_bits, first);
    confirm_witness(c1, c2, witness, compare_wires);
    return {Outcome::Inequivalent, witness, 0};
  }

  const auto& rnd = std::get<RandomTrials>(mode);
  for (std::uint64_t t = 0; t < rnd.trials; ++t) {
    BitState input = random_input(c1.width(), index_bits, rnd.seed, t);
    BitState o1 = simulate(c1, input);
    BitState o2 = simulate(c2, input);
    for (unsigned w = 0; w < compare_wires; ++w) {
      if (o1.bit(w) != o2.bit(w)) {
        confirm_witness(c1, c2, input, compare_wires);
        return {Outcome::Inequivalent, input, t + 1};
      }
    }
  }
  return {Outcome::Unknown, std::nullopt, rnd.trials};
}

}  // namespace

EquivVerdict strong_equiv(const Circuit& c1, const Circuit& c2,
                          const CheckMode& mode) {
  if (c1.width() != c2.width())
    throw WidthMismatchError("cannot compare width " +
                             std::to_string(c1.width()) + " with width " +
                             std::to_string(c2.width()));
  return check(c1, c2, c1.width(), c1.width(), mode);
}

EquivVerdict is_identity_circuit(const Circuit& c, const CheckMode& mode) {
  return strong_equiv(c, Circuit(c.width()), mode);
}

EquivVerdict weak_equiv(const Circuit& c1, const Circuit& c2, std::size_t n,
                        std::size_t m, const CheckMode& mode) {
  if (c1.width() != c2.width())
    throw WidthMismatchError("cannot compare width " +
                             std::to_string(c1.width()) + " with width " +
                             std::to_string(c2.width()));
  if (n > c1.width())
    throw IndexError("input count " + std::to_string(n) + " exceeds width " +
                     std::to_string(c1.width()));
  if (m > c1.width())
    throw IndexError("output count " + std::to_string(m) + " exceeds width " +
                     std::to_string(c1.width()));
  return check(c1, c2, static_cast<unsigned>(n), static_cast<unsigned>(m), mode);
}

SatResult brute_force_sat(const CnfFormula& f, unsigned var_limit) {
  validate_cnf(f);
  if (static_cast<unsigned>(f.num_vars) > var_limit)
    throw LimitExceededError("brute-force search over " +
                             std::to_string(f.num_vars) +
                             " variables exceeds the limit of " +
                             std::to_string(var_limit));
  if (f.num_vars > 63)
    throw LimitExceededError("brute-force search supports at most 63 variables");
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t index = 0; index < total; ++index) {
    BitState assignment = BitState::from_index(f.num_vars, index);
    if (eval_cnf(f, assignment)) return {true, assignment};
  }
  return {false, std::nullopt};
}

}  // namespace rev
