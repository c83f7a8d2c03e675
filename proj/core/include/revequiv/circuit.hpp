#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "revequiv/bitstate.hpp"

namespace rev {

enum class GateKind : std::uint8_t { Fredkin, Toffoli };

// A reversible gate acting on three pairwise-distinct wires (0-based).
//
//   Fredkin(c, a, b):   swaps bits a and b iff bit c is 1.
//   Toffoli(c1, c2, t): flips bit t iff bits c1 and c2 are both 1.
//
// Both gates are their own inverse.
class Gate {
 public:
  static Gate fredkin(unsigned control, unsigned target_a, unsigned target_b);
  static Gate toffoli(unsigned control_1, unsigned control_2, unsigned target);

  GateKind kind() const { return kind_; }

  // Fredkin roles.
  unsigned control() const { return wires_[0]; }
  unsigned target_a() const { return wires_[1]; }
  unsigned target_b() const { return wires_[2]; }

  // Toffoli roles.
  unsigned control_1() const { return wires_[0]; }
  unsigned control_2() const { return wires_[1]; }
  unsigned target() const { return wires_[2]; }

  unsigned max_wire() const;

  // Applies the gate to a state in place. Bits not named by the gate are
  // untouched.
  void apply(BitState& state) const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, unsigned w0, unsigned w1, unsigned w2);

  GateKind kind_;
  std::array<unsigned, 3> wires_;
};

// A reversible circuit: a fixed width b and an ordered list of gates,
// applied first-to-last. Every circuit computes a bijection on the 2^b
// states.
class Circuit {
 public:
  // Empty circuit (the identity function on `width` wires).
  explicit Circuit(unsigned width) : width_(width) {}

  // Throws IndexError if any gate names a wire >= width.
  Circuit(unsigned width, std::vector<Gate> gates);

  unsigned width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned width_;
  std::vector<Gate> gates_;
};

// Applies every gate in order to a copy of input. Throws
// LengthMismatchError unless input.size() == c.width().
BitState simulate(const Circuit& c, const BitState& input);

// The inverse circuit: gates reversed (each gate is self-inverse), so
// simulate(invert_circuit(c), simulate(c, x)) == x for every x.
Circuit invert_circuit(const Circuit& c);

// Rewrites each Fredkin(c, a, b) as the equivalent three-Toffoli sequence
// Toffoli(c, b, a), Toffoli(c, a, b), Toffoli(c, b, a). The input must be
// Fredkin-only; throws UnsupportedGateError otherwise.
Circuit fredkin_to_toffoli(const Circuit& c);

// Concatenation: run first, then second. Throws WidthMismatchError unless
// widths agree.
Circuit concat(const Circuit& first, const Circuit& second);

struct CircuitStats {
  unsigned width = 0;
  std::size_t gate_count = 0;
  std::size_t fredkin_count = 0;
  std::size_t toffoli_count = 0;
};

CircuitStats stats(const Circuit& c);

// Reads the circuit text format:
//
//   circuit <width>
//   fredkin <control> <target_a> <target_b>
//   toffoli <control_1> <control_2> <target>
//
// Blank lines are skipped and '#' starts a comment that runs to the end
// of the line. Throws ParseError on malformed input, unknown gate kinds,
// repeated wires within a gate, or wires >= width.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(std::string_view text);

// Writes the format parse_circuit reads. Deterministic: equal circuits
// serialize to identical bytes.
void write_circuit(std::ostream& out, const Circuit& c);

}  // namespace rev
