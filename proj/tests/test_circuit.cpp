#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "revequiv/circuit.hpp"
#include "revequiv/errors.hpp"
#include "support/gen.hpp"

using rev::BitState;
using rev::Circuit;
using rev::Gate;
using rev::GateKind;

namespace {

// All eight width-3 behaviors of a gate, as output indexed by input.
std::vector<std::string> truth_table(const Circuit& c) {
  std::vector<std::string> rows;
  for (std::uint64_t x = 0; x < 8; ++x)
    rows.push_back(rev::simulate(c, BitState::from_index(3, x)).to_string());
  return rows;
}

}  // namespace

TEST_CASE("gate construction requires distinct wires") {
  CHECK_THROWS_AS(Gate::fredkin(1, 1, 2), rev::IndexError);
  CHECK_THROWS_AS(Gate::fredkin(1, 2, 1), rev::IndexError);
  CHECK_THROWS_AS(Gate::toffoli(0, 2, 2), rev::IndexError);
  Gate g = Gate::fredkin(6, 0, 1);
  CHECK(g.control() == 6);
  CHECK(g.target_a() == 0);
  CHECK(g.target_b() == 1);
  CHECK(g.max_wire() == 6);
}

TEST_CASE("circuit construction checks wire bounds") {
  CHECK_THROWS_AS(Circuit(3, {Gate::fredkin(0, 1, 3)}), rev::IndexError);
  CHECK_NOTHROW(Circuit(4, {Gate::fredkin(0, 1, 3)}));
  CHECK(Circuit(5).width() == 5);
  CHECK(Circuit(5).size() == 0);
}

TEST_CASE("Fredkin swaps its targets exactly when the control is set") {
  Circuit c(3, {Gate::fredkin(0, 1, 2)});
  CHECK(truth_table(c) == std::vector<std::string>{
                              "000", "001", "010", "011",
                              "100", "110", "101", "111"});
}

TEST_CASE("Toffoli flips its target exactly when both controls are set") {
  Circuit c(3, {Gate::toffoli(0, 1, 2)});
  CHECK(truth_table(c) == std::vector<std::string>{
                              "000", "001", "010", "011",
                              "100", "101", "111", "110"});
}

TEST_CASE("simulate rejects inputs of the wrong width") {
  Circuit c(3, {Gate::toffoli(0, 1, 2)});
  CHECK_THROWS_AS(rev::simulate(c, BitState(4)), rev::LengthMismatchError);
}

TEST_CASE("each gate is its own inverse") {
  for (Gate g : {Gate::fredkin(0, 1, 2), Gate::toffoli(0, 1, 2),
                 Gate::fredkin(2, 0, 1), Gate::toffoli(1, 2, 0)}) {
    Circuit twice(3, {g, g});
    for (std::uint64_t x = 0; x < 8; ++x) {
      BitState in = BitState::from_index(3, x);
      CHECK(rev::simulate(twice, in) == in);
    }
  }
}

TEST_CASE("gates leave unnamed wires untouched") {
  std::mt19937_64 rng(9001);
  for (int k = 0; k < 40; ++k) {
    Gate g = gen::gate(rng, 8);
    Circuit c(8, {g});
    std::set<unsigned> named;
    if (g.kind() == GateKind::Fredkin)
      named = {g.control(), g.target_a(), g.target_b()};
    else
      named = {g.control_1(), g.control_2(), g.target()};
    for (int trial = 0; trial < 20; ++trial) {
      BitState in = gen::bits(rng, 8);
      BitState out = rev::simulate(c, in);
      for (unsigned w = 0; w < 8; ++w)
        if (!named.contains(w)) CHECK(out.bit(w) == in.bit(w));
    }
  }
}

TEST_CASE("every circuit computes a bijection") {
  std::mt19937_64 rng(9002);
  for (unsigned width : {3u, 6u, 9u}) {
    Circuit c = gen::circuit(rng, width, 40);
    std::set<std::uint64_t> seen;
    for (std::uint64_t x = 0; x < (1ull << width); ++x)
      seen.insert(rev::simulate(c, BitState::from_index(width, x)).to_index());
    CHECK(seen.size() == (1ull << width));
  }
}

TEST_CASE("invert_circuit undoes the circuit") {
  std::mt19937_64 rng(9003);
  Circuit c = gen::circuit(rng, 8, 50);
  Circuit inv = rev::invert_circuit(c);
  CHECK(rev::invert_circuit(inv) == c);
  for (int trial = 0; trial < 100; ++trial) {
    BitState in = gen::bits(rng, 8);
    CHECK(rev::simulate(inv, rev::simulate(c, in)) == in);
    CHECK(rev::simulate(c, rev::simulate(inv, in)) == in);
  }
  CHECK(rev::invert_circuit(Circuit(4)) == Circuit(4));
}

TEST_CASE("fredkin_to_toffoli preserves behavior gate for gate") {
  Circuit single(3, {Gate::fredkin(0, 1, 2)});
  Circuit lowered = rev::fredkin_to_toffoli(single);
  REQUIRE(lowered.size() == 3);
  for (const Gate& g : lowered.gates()) CHECK(g.kind() == GateKind::Toffoli);
  CHECK(truth_table(lowered) == truth_table(single));

  std::mt19937_64 rng(9004);
  Circuit c = gen::circuit(rng, 6, 30, /*fredkin_only=*/true);
  Circuit t = rev::fredkin_to_toffoli(c);
  CHECK(t.size() == 3 * c.size());
  for (std::uint64_t x = 0; x < 64; ++x) {
    BitState in = BitState::from_index(6, x);
    CHECK(rev::simulate(t, in) == rev::simulate(c, in));
  }
}

TEST_CASE("fredkin_to_toffoli rejects circuits that already have Toffolis") {
  Circuit c(3, {Gate::toffoli(0, 1, 2)});
  CHECK_THROWS_AS(rev::fredkin_to_toffoli(c), rev::UnsupportedGateError);
  CHECK(rev::fredkin_to_toffoli(Circuit(3)).size() == 0);
}

TEST_CASE("concat runs the first circuit before the second") {
  Circuit a(3, {Gate::toffoli(0, 1, 2)});
  Circuit b(3, {Gate::fredkin(2, 0, 1)});
  Circuit ab = rev::concat(a, b);
  REQUIRE(ab.size() == 2);
  for (std::uint64_t x = 0; x < 8; ++x) {
    BitState in = BitState::from_index(3, x);
    CHECK(rev::simulate(ab, in) == rev::simulate(b, rev::simulate(a, in)));
  }
  CHECK_THROWS_AS(rev::concat(a, Circuit(4)), rev::WidthMismatchError);
}

TEST_CASE("stats counts gates by kind") {
  rev::CircuitStats empty = rev::stats(Circuit(7));
  CHECK(empty.width == 7);
  CHECK(empty.gate_count == 0);

  Circuit c(4, {Gate::fredkin(0, 1, 2), Gate::toffoli(0, 1, 3),
                Gate::fredkin(3, 0, 2)});
  rev::CircuitStats s = rev::stats(c);
  CHECK(s.gate_count == 3);
  CHECK(s.fredkin_count == 2);
  CHECK(s.toffoli_count == 1);
}

TEST_CASE("circuit files round-trip") {
  std::mt19937_64 rng(9005);
  for (int k = 0; k < 20; ++k) {
    Circuit c = gen::circuit(rng, gen::pick(rng, 3, 10), gen::pick(rng, 0, 30));
    std::ostringstream out;
    rev::write_circuit(out, c);
    CHECK(rev::parse_circuit(out.str()) == c);
  }
}

TEST_CASE("parse_circuit reads comments and blank lines") {
  Circuit c = rev::parse_circuit(
      "# header comment\n"
      "circuit 4   # width\n"
      "\n"
      "fredkin 0 1 2\n"
      "toffoli 1 2 3 # trailing\n");
  CHECK(c.width() == 4);
  REQUIRE(c.size() == 2);
  CHECK(c.gates()[0] == Gate::fredkin(0, 1, 2));
  CHECK(c.gates()[1] == Gate::toffoli(1, 2, 3));
}

TEST_CASE("parse_circuit rejects malformed input") {
  CHECK_THROWS_AS(rev::parse_circuit(""), rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("width 3\n"), rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit x\n"), rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit 3 3\n"), rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit 3\nswap 0 1 2\n"), rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit 3\nfredkin 0 1\n"), rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit 3\nfredkin 0 1 2 3\n"),
                  rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit 3\nfredkin 0 1 3\n"),
                  rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit 3\nfredkin 0 1 1\n"),
                  rev::ParseError);
  CHECK_THROWS_AS(rev::parse_circuit("circuit 3\nfredkin 0 -1 2\n"),
                  rev::ParseError);
}
