#include <random>
#include <sstream>

#include "doctest.h"
#include "revequiv/compile.hpp"
#include "revequiv/equiv.hpp"
#include "revequiv/errors.hpp"
#include "support/gen.hpp"

using rev::BitState;
using rev::BranchingProgram;
using rev::Circuit;
using rev::CnfFormula;
using rev::Gate;
using rev::GateKind;
using rev::Instruction;
using rev::Perm5;
using rev::WireLayout;

namespace {

// Independent oracle for the positional convention: the content of wire
// j-1 moves to wire sigma(j)-1.
std::array<bool, 5> apply_positional(const Perm5& sigma,
                                     const std::array<bool, 5>& in) {
  std::array<bool, 5> out{};
  for (int j = 1; j <= 5; ++j) out[sigma.image_of(j) - 1] = in[j - 1];
  return out;
}

// Builds the full circuit input: perm wires from `pattern`, input wires
// from `assignment`, the one wire from `one`.
BitState layout_input(const WireLayout& layout, const std::array<bool, 5>& pattern,
                      const BitState& assignment, bool one) {
  BitState in(layout.width());
  for (int j = 1; j <= 5; ++j) in.set_bit(layout.perm_wire(j), pattern[j - 1]);
  for (std::size_t v = 1; v <= layout.num_inputs; ++v)
    in.set_bit(layout.input_wire(v), assignment.bit(v - 1));
  in.set_bit(layout.one_wire(), one);
  return in;
}

std::array<bool, 5> perm_pattern(std::uint64_t bits) {
  std::array<bool, 5> p{};
  for (int k = 0; k < 5; ++k) p[k] = (bits >> (4 - k)) & 1;
  return p;
}

std::array<bool, 5> read_perm_wires(const WireLayout& layout, const BitState& s) {
  std::array<bool, 5> p{};
  for (int j = 1; j <= 5; ++j) p[j - 1] = s.bit(layout.perm_wire(j));
  return p;
}

}  // namespace

TEST_CASE("wire layout places inputs between perm wires and the one wire") {
  WireLayout layout{3};
  CHECK(layout.perm_wire(1) == 0);
  CHECK(layout.perm_wire(5) == 4);
  CHECK(layout.input_wire(1) == 5);
  CHECK(layout.input_wire(3) == 7);
  CHECK(layout.one_wire() == 8);
  CHECK(layout.width() == 9);
  CHECK_THROWS_AS(layout.perm_wire(0), rev::IndexError);
  CHECK_THROWS_AS(layout.perm_wire(6), rev::IndexError);
  CHECK_THROWS_AS(layout.input_wire(0), rev::IndexError);
  CHECK_THROWS_AS(layout.input_wire(4), rev::IndexError);
}

TEST_CASE("triple_to_gates lowers the unconditional identity to nothing") {
  WireLayout layout{2};
  CHECK(rev::triple_to_gates({1, Perm5(), Perm5()}, layout).empty());
}

TEST_CASE("triple_to_gates lowers an if-one transposition to one gate") {
  WireLayout layout{2};
  auto gates = rev::triple_to_gates({2, Perm5(), Perm5::parse("(1 2)")}, layout);
  REQUIRE(gates.size() == 1);
  CHECK(gates[0] == Gate::fredkin(layout.input_wire(2), 0, 1));
}

TEST_CASE("triple_to_gates lowers an if-zero transposition to a cancelling pair") {
  WireLayout layout{1};
  auto gates = rev::triple_to_gates({1, Perm5::parse("(1 2)"), Perm5()}, layout);
  REQUIRE(gates.size() == 2);
  CHECK(gates[0] == Gate::fredkin(layout.input_wire(1), 0, 1));
  CHECK(gates[1] == Gate::fredkin(layout.one_wire(), 0, 1));

  // With the one wire set the pair swaps exactly when the input bit is 0.
  Circuit c(layout.width(), gates);
  for (bool input : {false, true}) {
    for (bool one : {false, true}) {
      BitState in = layout_input(layout, {true, false, false, false, false},
                                 BitState::from_index(1, input), one);
      BitState out = rev::simulate(c, in);
      bool swapped = one != input;  // one=1,input=0 or one=0,input=1
      CHECK(out.bit(0) == (swapped ? false : true));
      CHECK(out.bit(1) == (swapped ? true : false));
    }
  }
}

TEST_CASE("triple_to_gates emits the if-one part before the if-zero part") {
  WireLayout layout{1};
  auto gates = rev::triple_to_gates(
      {1, Perm5::parse("(1 2 3)"), Perm5::parse("(4 5)")}, layout);
  // (4 5) is one transposition; (1 2 3) is two, each with a partner gate.
  REQUIRE(gates.size() == 5);
  CHECK(gates[0] == Gate::fredkin(layout.input_wire(1), 3, 4));
  CHECK(gates[1].control() == layout.input_wire(1));
  CHECK(gates[2].control() == layout.one_wire());
  CHECK(gates[4].control() == layout.one_wire());
}

TEST_CASE("triple_to_gates rejects out-of-range input indices") {
  WireLayout layout{2};
  CHECK_THROWS_AS(rev::triple_to_gates({3, Perm5(), Perm5()}, layout),
                  rev::IndexError);
  CHECK_THROWS_AS(rev::triple_to_gates({0, Perm5(), Perm5()}, layout),
                  rev::IndexError);
}

TEST_CASE("bp_to_fredkin on a one-instruction program") {
  BranchingProgram p{1, {{1, Perm5(), Perm5::parse("(1 2)")}}};
  auto [c, layout] = rev::bp_to_fredkin(p);
  CHECK(c.width() == 7);
  REQUIRE(c.size() == 1);

  BitState in = layout_input(layout, {true, false, false, false, false},
                             BitState::from_string("1"), true);
  BitState out = rev::simulate(c, in);
  CHECK(read_perm_wires(layout, out) ==
        std::array<bool, 5>{false, true, false, false, false});
}

TEST_CASE("bp_to_fredkin applies the program value to the perm wires") {
  std::mt19937_64 rng(10001);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = gen::pick(rng, 1, 4);
    BranchingProgram p = gen::bp(rng, n, gen::pick(rng, 0, 8));
    auto [c, layout] = rev::bp_to_fredkin(p);
    CHECK(c.size() <= rev::kMaxGatesPerInstruction * p.instructions.size());
    CHECK(rev::stats(c).toffoli_count == 0);

    for (std::uint64_t a = 0; a < (1ull << n); ++a) {
      BitState assignment = BitState::from_index(n, a);
      Perm5 value = rev::eval_bp(p, assignment);
      for (std::uint64_t s = 0; s < 32; ++s) {
        std::array<bool, 5> pattern = perm_pattern(s);
        BitState in = layout_input(layout, pattern, assignment, true);
        BitState out = rev::simulate(c, in);
        REQUIRE(read_perm_wires(layout, out) ==
                apply_positional(value, pattern));
        // Inputs and the one wire pass through untouched.
        for (std::size_t v = 1; v <= n; ++v)
          REQUIRE(out.bit(layout.input_wire(v)) == assignment.bit(v - 1));
        REQUIRE(out.bit(layout.one_wire()));
      }
    }
  }
}

TEST_CASE("bp_to_fredkin preserves controls on every input, set or not") {
  std::mt19937_64 rng(10002);
  for (int k = 0; k < 10; ++k) {
    std::size_t n = gen::pick(rng, 1, 3);
    BranchingProgram p = gen::bp(rng, n, gen::pick(rng, 1, 6));
    auto [c, layout] = rev::bp_to_fredkin(p);
    for (std::uint64_t x = 0; x < (1ull << c.width()); ++x) {
      BitState in = BitState::from_index(c.width(), x);
      BitState out = rev::simulate(c, in);
      for (std::size_t v = 1; v <= n; ++v)
        REQUIRE(out.bit(layout.input_wire(v)) == in.bit(layout.input_wire(v)));
      REQUIRE(out.bit(layout.one_wire()) == in.bit(layout.one_wire()));
    }
  }
}

TEST_CASE("the gadget for a contradiction is the identity everywhere") {
  CnfFormula f = rev::parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  Circuit g = rev::unsat_gadget(f);
  CHECK(g.width() == 7);
  for (std::uint64_t x = 0; x < 128; ++x) {
    BitState in = BitState::from_index(7, x);
    REQUIRE(rev::simulate(g, in) == in);
  }
}

TEST_CASE("the gadget for a satisfiable formula moves the perm wires") {
  CnfFormula f = rev::parse_dimacs("p cnf 1 1\n1 0\n");
  rev::GadgetBuild build = rev::build_unsat_gadget(f);
  const WireLayout& layout = build.layout;
  CHECK(build.bp_length == 1);

  // On x1=1 with the one wire set, the perm wires move by the commutator
  // of (1 2) with the program's 5-cycle, applied positionally.
  Perm5 expected = commutator(Perm5::parse("(1 2)"), Perm5::parse("(1 2 3 4 5)"));
  CHECK(expected.to_string() == "(1 2 5)");
  for (std::uint64_t s = 0; s < 32; ++s) {
    std::array<bool, 5> pattern = perm_pattern(s);
    BitState in = layout_input(layout, pattern, BitState::from_string("1"), true);
    BitState out = rev::simulate(build.circuit, in);
    REQUIRE(read_perm_wires(layout, out) == apply_positional(expected, pattern));
  }

  // On x1=0, or with the one wire clear, nothing moves.
  for (std::uint64_t s = 0; s < 32; ++s) {
    std::array<bool, 5> pattern = perm_pattern(s);
    for (auto [assignment, one] : {std::pair{false, true}, {false, false},
                                   {true, false}}) {
      BitState in = layout_input(layout, pattern,
                                 BitState::from_index(1, assignment), one);
      REQUIRE(rev::simulate(build.circuit, in) == in);
    }
  }
}

TEST_CASE("gadget structure: swap, body, swap, inverse body") {
  CnfFormula f = rev::parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n");
  rev::GadgetBuild build = rev::build_unsat_gadget(f);
  const auto& gates = build.circuit.gates();
  REQUIRE(gates.size() >= 2);

  Gate swap01 = Gate::fredkin(build.layout.one_wire(), 0, 1);
  CHECK(gates.front() == swap01);
  std::size_t body = (gates.size() - 2) / 2;
  CHECK(gates[1 + body] == swap01);
  // The second half inverts the first, gate by gate in reverse order.
  for (std::size_t k = 0; k < body; ++k)
    CHECK(gates[gates.size() - 1 - k] == gates[1 + k]);

  CHECK(build.circuit.size() <=
        2 * rev::kMaxGatesPerInstruction * build.bp_length + 2);
  CHECK(rev::stats(build.circuit).toffoli_count == 0);
}

TEST_CASE("gadgets reserve wires for variables the formula never reads") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{{1, false}}};
  rev::GadgetBuild build = rev::build_unsat_gadget(f);
  CHECK(build.layout.num_inputs == 3);
  CHECK(build.circuit.width() == 9);
}

TEST_CASE("gadget gate count grows linearly with program length") {
  std::mt19937_64 rng(10003);
  for (int k = 0; k < 20; ++k) {
    CnfFormula f = gen::cnf(rng, 4, 6, 3);
    rev::GadgetBuild build = rev::build_unsat_gadget(f);
    CHECK(build.circuit.size() <=
          2 * rev::kMaxGatesPerInstruction * build.bp_length + 4);
  }
}

TEST_CASE("write_gadget output is a loadable circuit file") {
  CnfFormula f = rev::parse_dimacs("p cnf 2 1\n1 -2 0\n");
  rev::GadgetBuild build = rev::build_unsat_gadget(f);
  std::ostringstream out;
  rev::write_gadget(out, build);
  CHECK(out.str().starts_with("#"));
  CHECK(rev::parse_circuit(out.str()) == build.circuit);
}
