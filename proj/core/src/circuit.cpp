#include "revequiv/circuit.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "revequiv/errors.hpp"

namespace rev {

Gate::Gate(GateKind kind, unsigned w0, unsigned w1, unsigned w2)
    : kind_(kind), wires_{w0, w1, w2} {
  if (w0 == w1 || w0 == w2 || w1 == w2)
    throw IndexError("gate wires must be pairwise distinct: " +
                     std::to_string(w0) + ", " + std::to_string(w1) + ", " +
                     std::to_string(w2));
}

Gate Gate::fredkin(unsigned control, unsigned target_a, unsigned target_b) {
  return Gate(GateKind::Fredkin, control, target_a, target_b);
}

Gate Gate::toffoli(unsigned control_1, unsigned control_2, unsigned target) {
  return Gate(GateKind::Toffoli, control_1, control_2, target);
}

unsigned Gate::max_wire() const {
  return std::max({wires_[0], wires_[1], wires_[2]});
}

void Gate::apply(BitState& state) const {
  switch (kind_) {
    case GateKind::Fredkin:
      if (state.bit(control())) {
        bool a = state.bit(target_a());
        state.set_bit(target_a(), state.bit(target_b()));
        state.set_bit(target_b(), a);
      }
      break;
    case GateKind::Toffoli:
      if (state.bit(control_1()) && state.bit(control_2()))
        state.set_bit(target(), !state.bit(target()));
      break;
  }
}

Circuit::Circuit(unsigned width, std::vector<Gate> gates)
    : width_(width), gates_(std::move(gates)) {
  for (const Gate& g : gates_)
    if (g.max_wire() >= width)
      throw IndexError("gate wire " + std::to_string(g.max_wire()) +
                       " outside circuit width " + std::to_string(width));
}

BitState simulate(const Circuit& c, const BitState& input) {
  if (input.size() != c.width())
    throw LengthMismatchError("input has " + std::to_string(input.size()) +
                              " bits, circuit width is " +
                              std::to_string(c.width()));
  BitState state = input;
  for (const Gate& g : c.gates()) g.apply(state);
  return state;
}

Circuit invert_circuit(const Circuit& c) {
  std::vector<Gate> gates(c.gates().rbegin(), c.gates().rend());
  return Circuit(c.width(), std::move(gates));
}

Circuit fredkin_to_toffoli(const Circuit& c) {
  std::vector<Gate> gates;
  gates.reserve(3 * c.size());
  for (const Gate& g : c.gates()) {
    if (g.kind() != GateKind::Fredkin)
      throw UnsupportedGateError("fredkin_to_toffoli requires a Fredkin-only circuit");
    unsigned ctl = g.control(), a = g.target_a(), b = g.target_b();
    gates.push_back(Gate::toffoli(ctl, b, a));
    gates.push_back(Gate::toffoli(ctl, a, b));
    gates.push_back(Gate::toffoli(ctl, b, a));
  }
  return Circuit(c.width(), std::move(gates));
}

Circuit concat(const Circuit& first, const Circuit& second) {
  if (first.width() != second.width())
    throw WidthMismatchError("cannot concatenate width " +
                             std::to_string(first.width()) + " with width " +
                             std::to_string(second.width()));
  std::vector<Gate> gates = first.gates();
  gates.insert(gates.end(), second.gates().begin(), second.gates().end());
  return Circuit(first.width(), std::move(gates));
}

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  s.width = c.width();
  s.gate_count = c.size();
  for (const Gate& g : c.gates()) {
    if (g.kind() == GateKind::Fredkin)
      ++s.fredkin_count;
    else
      ++s.toffoli_count;
  }
  return s;
}

Circuit parse_circuit(std::istream& in) {
  bool have_header = false;
  unsigned width = 0;
  std::vector<Gate> gates;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const auto at = [&] { return " at line " + std::to_string(lineno); };
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;

    if (!have_header) {
      long w = -1;
      if (head != "circuit" || !(tokens >> w) || w < 0)
        throw ParseError("expected 'circuit <width>'" + at());
      std::string extra;
      if (tokens >> extra) throw ParseError("trailing tokens" + at());
      width = static_cast<unsigned>(w);
      have_header = true;
      continue;
    }

    long w0 = -1, w1 = -1, w2 = -1;
    if (!(tokens >> w0 >> w1 >> w2) || w0 < 0 || w1 < 0 || w2 < 0)
      throw ParseError("expected three wire indices" + at());
    std::string extra;
    if (tokens >> extra) throw ParseError("trailing tokens" + at());
    if (std::max({w0, w1, w2}) >= static_cast<long>(width))
      throw ParseError("wire index outside width " + std::to_string(width) + at());

    try {
      if (head == "fredkin")
        gates.push_back(Gate::fredkin(w0, w1, w2));
      else if (head == "toffoli")
        gates.push_back(Gate::toffoli(w0, w1, w2));
      else
        throw ParseError("unknown gate kind '" + head + "'" + at());
    } catch (const IndexError& e) {
      throw ParseError(std::string(e.what()) + at());
    }
  }

  if (!have_header) throw ParseError("missing 'circuit <width>' header");
  return Circuit(width, std::move(gates));
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_circuit(in);
}

void write_circuit(std::ostream& out, const Circuit& c) {
  out << "circuit " << c.width() << '\n';
  for (const Gate& g : c.gates()) {
    if (g.kind() == GateKind::Fredkin)
      out << "fredkin " << g.control() << ' ' << g.target_a() << ' '
          << g.target_b() << '\n';
    else
      out << "toffoli " << g.control_1() << ' ' << g.control_2() << ' '
          << g.target() << '\n';
  }
}

}  // namespace rev
