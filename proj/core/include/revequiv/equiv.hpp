#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "revequiv/bitstate.hpp"
#include "revequiv/circuit.hpp"
#include "revequiv/formula.hpp"

namespace rev {

enum class Outcome { Equivalent, Inequivalent, Unknown };

// Result of an equivalence check. An Inequivalent verdict always carries
// a witness input on which the compared outputs differ; the checker
// re-simulates every witness before returning it.
struct EquivVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<BitState> witness;
  // Random mode: number of trials performed.
  std::uint64_t trials = 0;
};

// Sweep all inputs. Refuses widths above width_limit (LimitExceededError).
// The sweep is split across `jobs` worker threads; the verdict and
// witness are independent of the worker count because the reported
// witness is always the lexicographically smallest differing input, with
// wire 0 taken as the most significant bit.
struct Exhaustive {
  unsigned width_limit = 24;
  unsigned jobs = 1;
};

// Sample `trials` inputs derived from (seed, trial index) with a
// counter-based generator, so runs with equal seeds are identical and no
// trial depends on any other.
struct RandomTrials {
  std::uint64_t trials = 1u << 16;
  std::uint64_t seed = 0;
};

using CheckMode = std::variant<Exhaustive, RandomTrials>;

// Do c1 and c2 compute the same function on all 2^b inputs? Exhaustive
// mode returns Equivalent or Inequivalent; random mode returns
// Inequivalent when a differing input is sampled and Unknown otherwise.
// Throws WidthMismatchError unless widths agree.
EquivVerdict strong_equiv(const Circuit& c1, const Circuit& c2,
                          const CheckMode& mode);

// strong_equiv against the empty circuit of the same width.
EquivVerdict is_identity_circuit(const Circuit& c, const CheckMode& mode);

// Weak equivalence: inputs range over the first n wires (the rest start
// at 0) and only the first m output wires are compared. Exhaustive mode
// sweeps 2^n inputs and requires n <= width_limit. Throws
// WidthMismatchError unless widths agree, IndexError unless n and m are
// at most the width.
EquivVerdict weak_equiv(const Circuit& c1, const Circuit& c2, std::size_t n,
                        std::size_t m, const CheckMode& mode);

struct SatResult {
  bool satisfiable = false;
  std::optional<BitState> witness;
};

// Sweeps all assignments in increasing index order (variable 1 as the
// most significant bit) and returns the first satisfying one. Refuses
// formulas with more than var_limit variables (LimitExceededError).
SatResult brute_force_sat(const CnfFormula& f, unsigned var_limit = 24);

}  // namespace rev
