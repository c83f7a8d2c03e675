#pragma once

#include <iosfwd>
#include <memory>
#include <string_view>
#include <vector>

#include "revequiv/bitstate.hpp"

namespace rev {

// A possibly negated propositional variable. Variables are 1-based.
struct Literal {
  int variable;
  bool negated;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Conjunctive normal form: an AND over clauses, each clause an OR over
// literals. A valid formula has num_vars >= 1, at least one clause, no
// empty clause, and every literal's variable in 1..num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Throws Error unless f satisfies the validity rules above.
void validate_cnf(const CnfFormula& f);

// Reads DIMACS CNF: optional 'c' comment lines, one "p cnf <vars>
// <clauses>" header, then whitespace-separated literals with each clause
// terminated by 0. Clauses may span lines. Throws ParseError on malformed
// input, literals out of range, a clause count that contradicts the
// header, an empty clause, or an empty clause list.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

// Writes DIMACS that parse_dimacs accepts, one clause per line.
void write_dimacs(std::ostream& out, const CnfFormula& f);

// Evaluates f under a truth assignment of exactly num_vars bits
// (variable k at bit k-1). Throws LengthMismatchError on a size mismatch.
bool eval_cnf(const CnfFormula& f, const BitState& assignment);

// A Boolean formula over AND/OR nodes of fan-in exactly 2, with negation
// only at the leaves. Immutable; copies share structure.
class Formula {
 public:
  enum class Kind { Leaf, And, Or };

  static Formula leaf(Literal lit);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);

  Kind kind() const;
  // Leaf only.
  const Literal& literal() const;
  // And/Or only.
  Formula left() const;
  Formula right() const;

  // Edge count of the longest root-to-leaf path; 0 for a leaf.
  int depth() const;

  // Largest variable index appearing in the formula.
  int max_variable() const;

  // Evaluates under an assignment covering every variable in the formula
  // (variable k at bit k-1). Throws LengthMismatchError if some leaf's
  // variable exceeds the assignment's size.
  bool eval(const BitState& assignment) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Builds a fan-in-2 formula equivalent to f: a balanced OR tree per
// clause and a balanced AND tree over the clauses. List splits put the
// ceiling half on the left, so the result's depth is at most
// ceil(log2(max clause width)) + ceil(log2(clause count)).
Formula cnf_to_formula(const CnfFormula& f);

}  // namespace rev
