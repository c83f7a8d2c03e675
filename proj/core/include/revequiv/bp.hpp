#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "revequiv/bitstate.hpp"
#include "revequiv/formula.hpp"
#include "revequiv/perm5.hpp"

namespace rev {

// One branching-program instruction (i, if_zero, if_one): contributes
// if_one when input bit i is 1 and if_zero when it is 0. input_index is
// 1-based. An instruction with if_zero == if_one acts unconditionally.
struct Instruction {
  std::size_t input_index;
  Perm5 if_zero;
  Perm5 if_one;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

// A width-5 permutation branching program over num_inputs input bits.
// Every instruction's input_index must lie in 1..num_inputs.
struct BranchingProgram {
  std::size_t num_inputs = 0;
  std::vector<Instruction> instructions;

  friend bool operator==(const BranchingProgram&, const BranchingProgram&) = default;
};

// Left-to-right composition of each instruction's selected branch. The
// empty program yields the identity. Throws LengthMismatchError unless
// assignment.size() == num_inputs, IndexError on an instruction index
// outside 1..num_inputs.
Perm5 eval_bp(const BranchingProgram& p, const BitState& assignment);

// Reverses the instruction list and inverts both branches of every
// instruction, so eval_bp(invert_bp(p), a) == eval_bp(p, a).inverse().
BranchingProgram invert_bp(const BranchingProgram& p);

// Conjugates both branches of every instruction by the canonical
// conjugator taking `from` to `to` (both must be 5-cycles; throws
// NotFiveCycleError otherwise). A program that evaluates to `from` or the
// identity then evaluates to `to` or the identity on the same inputs.
BranchingProgram retarget_bp(const BranchingProgram& p, const Perm5& from,
                             const Perm5& to);

// Compiles a fan-in-2 formula into a program that evaluates to `target`
// on assignments satisfying the formula and to the identity on all
// others. target must be a 5-cycle (throws NotFiveCycleError).
//
// The construction recurses on the formula: a leaf becomes one
// instruction reading its variable; an AND node becomes the commutator
// of its children compiled to a commutator pair for the target; an OR
// node applies De Morgan, with each negation folded into the subprogram's
// final instruction so no extra instructions are spent. The output length
// is therefore at most 4^depth; that bound is rechecked on exit and a
// violation throws BoundExceededError. num_inputs is the largest variable
// appearing in the formula.
//
// Deterministic: equal formulas and targets compile to identical
// programs.
BranchingProgram barrington_compile(const Formula& f, const Perm5& target);

// Reads the branching-program text format:
//
//   bp <num_inputs> <num_instructions>
//   <input_index> <if_zero> <if_one>
//
// with each permutation in cycle notation ("(1 2)(3 4)" is one token;
// cycles of one permutation are written without separating spaces).
// Blank lines are skipped and '#' starts a comment running to the end of
// the line. Throws ParseError on malformed input, an instruction count
// that contradicts the header, or an input index outside 1..num_inputs.
BranchingProgram parse_bp(std::istream& in);
BranchingProgram parse_bp(std::string_view text);

// Writes the format parse_bp reads. Deterministic.
void write_bp(std::ostream& out, const BranchingProgram& p);

}  // namespace rev
