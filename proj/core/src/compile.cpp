#include "revequiv/compile.hpp"

#include <ostream>
#include <string>

#include "revequiv/errors.hpp"

namespace rev {

unsigned WireLayout::perm_wire(int element) const {
  if (element < 1 || element > 5)
    throw IndexError("permutation element out of range: " +
                     std::to_string(element));
  return static_cast<unsigned>(element - 1);
}

unsigned WireLayout::input_wire(std::size_t variable) const {
  if (variable < 1 || variable > num_inputs)
    throw IndexError("input variable out of range: " + std::to_string(variable));
  return static_cast<unsigned>(4 + variable);
}

unsigned WireLayout::one_wire() const {
  return static_cast<unsigned>(5 + num_inputs);
}

unsigned WireLayout::width() const {
  return static_cast<unsigned>(6 + num_inputs);
}

std::vector<Gate> triple_to_gates(const Instruction& ins,
                                  const WireLayout& layout) {
  unsigned ctl = layout.input_wire(ins.input_index);
  std::vector<Gate> gates;

  for (const Transposition& t : to_transpositions(ins.if_one))
    gates.push_back(
        Gate::fredkin(ctl, layout.perm_wire(t.a), layout.perm_wire(t.b)));

  // For the if-zero branch each transposition becomes an input-controlled
  // swap cancelled by an unconditional one (the one wire carries 1), so
  // the net swap happens exactly when the input bit is 0.
  for (const Transposition& t : to_transpositions(ins.if_zero)) {
    gates.push_back(
        Gate::fredkin(ctl, layout.perm_wire(t.a), layout.perm_wire(t.b)));
    gates.push_back(Gate::fredkin(layout.one_wire(), layout.perm_wire(t.a),
                                  layout.perm_wire(t.b)));
  }
  return gates;
}

std::pair<Circuit, WireLayout> bp_to_fredkin(const BranchingProgram& p) {
  WireLayout layout{p.num_inputs};
  std::vector<Gate> gates;
  gates.reserve(kMaxGatesPerInstruction * p.instructions.size());
  for (const Instruction& ins : p.instructions) {
    std::vector<Gate> part = triple_to_gates(ins, layout);
    gates.insert(gates.end(), part.begin(), part.end());
  }
  return {Circuit(layout.width(), std::move(gates)), layout};
}

GadgetBuild build_unsat_gadget(const CnfFormula& f) {
  validate_cnf(f);
  const Perm5 alpha = Perm5::from_images({2, 3, 4, 5, 1});  // (1 2 3 4 5)

  BranchingProgram p = barrington_compile(cnf_to_formula(f), alpha);
  // The formula may not mention every declared variable; the layout must
  // still reserve an input wire for each.
  p.num_inputs = std::max(p.num_inputs, static_cast<std::size_t>(f.num_vars));

  auto [body, layout] = bp_to_fredkin(p);
  Gate swap01 =
      Gate::fredkin(layout.one_wire(), layout.perm_wire(1), layout.perm_wire(2));

  std::vector<Gate> gates;
  gates.reserve(2 * body.size() + 2);
  gates.push_back(swap01);
  gates.insert(gates.end(), body.gates().begin(), body.gates().end());
  gates.push_back(swap01);
  Circuit rest = invert_circuit(body);
  gates.insert(gates.end(), rest.gates().begin(), rest.gates().end());

  return {Circuit(layout.width(), std::move(gates)), layout,
          p.instructions.size()};
}

Circuit unsat_gadget(const CnfFormula& f) {
  return build_unsat_gadget(f).circuit;
}

void write_gadget(std::ostream& out, const GadgetBuild& g) {
  out << "# satisfiability gadget\n";
  out << "# inputs=" << g.layout.num_inputs << " bp_length=" << g.bp_length
      << " gates=" << g.circuit.size() << '\n';
  out << "# wires: perm=0..4 inputs=5.." << (4 + g.layout.num_inputs)
      << " one=" << g.layout.one_wire() << '\n';
  write_circuit(out, g.circuit);
}

}  // namespace rev
