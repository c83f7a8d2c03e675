#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "revequiv/bp.hpp"
#include "revequiv/circuit.hpp"
#include "revequiv/formula.hpp"

namespace rev {

// Wire layout shared by the branching-program lowering and the
// reduction gadget, for a program over n input bits:
//
//   wires 0..4    the five permutation wires (element k on wire k-1)
//   wires 5..n+4  the program's input bits
//   wire  n+5     the control ancilla ("one wire"), intended to carry 1
//
// Total width n + 6.
struct WireLayout {
  std::size_t num_inputs = 0;

  // Wire carrying element `element` (1-based, 1..5).
  unsigned perm_wire(int element) const;
  // Wire carrying input variable `variable` (1-based, 1..num_inputs).
  unsigned input_wire(std::size_t variable) const;
  unsigned one_wire() const;
  unsigned width() const;
};

// Largest number of Fredkin gates a single instruction can lower to:
// up to 4 transpositions for the if-one branch plus 2 gates per
// transposition (up to 4) for the if-zero branch.
inline constexpr std::size_t kMaxGatesPerInstruction = 12;

// Lowers one instruction (i, alpha, beta) to Fredkin gates on the layout's
// permutation wires. The if-one branch beta becomes one Fredkin per
// transposition, controlled by input wire i. The if-zero branch alpha
// becomes, per transposition, a Fredkin controlled by input wire i
// immediately followed by a Fredkin controlled by the one wire on the
// same pair: with the one wire set, the pair swaps exactly when input bit
// i is 0. Gates for the if-one branch come first. Throws IndexError if i
// is outside 1..layout.num_inputs.
//
// With the one wire set, the emitted gates permute the permutation wires
// positionally by the instruction's selected branch: the content of wire
// j-1 moves to wire sigma(j)-1.
std::vector<Gate> triple_to_gates(const Instruction& ins, const WireLayout& layout);

// Lowers a whole program to a Fredkin circuit on the layout for
// p.num_inputs. With the one wire set, the circuit applies eval_bp(p, a)
// positionally to the permutation wires, where a is read off the input
// wires. Input wires and the one wire are only ever used as controls, so
// the circuit returns them unchanged on every input. Gate count is at
// most kMaxGatesPerInstruction per instruction.
std::pair<Circuit, WireLayout> bp_to_fredkin(const BranchingProgram& p);

// A reduction circuit together with how it was built.
struct GadgetBuild {
  Circuit circuit;
  WireLayout layout;
  std::size_t bp_length = 0;
};

// Builds the satisfiability gadget for a CNF formula f over n variables:
// a width-(n+6) Fredkin circuit that is strongly equivalent to the
// identity iff f is unsatisfiable.
//
// Construction: compile cnf_to_formula(f) to a branching program with
// target (1 2 3 4 5), lower it to a circuit C, and emit
//
//   swap, C, swap, invert(C)
//
// where swap is a Fredkin controlled by the one wire exchanging
// permutation wires 0 and 1. On inputs with the one wire clear the two C
// halves cancel; with it set the circuit applies the commutator of (1 2)
// and the program's value, which is non-identity exactly when f's value
// under the input wires is true.
GadgetBuild build_unsat_gadget(const CnfFormula& f);

// Shorthand for build_unsat_gadget(f).circuit.
Circuit unsat_gadget(const CnfFormula& f);

// Writes the gadget's circuit with a comment header recording the
// variable count, branching-program length, and wire layout. The output
// is a valid circuit file; parse_circuit ignores the comments.
void write_gadget(std::ostream& out, const GadgetBuild& g);

}  // namespace rev
