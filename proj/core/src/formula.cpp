#include "revequiv/formula.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>

#include "revequiv/errors.hpp"

namespace rev {

void validate_cnf(const CnfFormula& f) {
  if (f.num_vars < 1) throw Error("formula must have at least one variable");
  if (f.clauses.empty()) throw Error("formula must have at least one clause");
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw Error("empty clause");
    for (const Literal& lit : clause)
      if (lit.variable < 1 || lit.variable > f.num_vars)
        throw Error("literal variable out of range: " +
                    std::to_string(lit.variable));
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<Literal> current;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const auto at = [&] { return " at line " + std::to_string(lineno); };
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == 'c') continue;

    if (line[pos] == 'p') {
      if (have_header) throw ParseError("duplicate header" + at());
      std::istringstream header(line.substr(pos));
      std::string p, fmt;
      long vars = -1, clauses = -1;
      if (!(header >> p >> fmt >> vars >> clauses) || p != "p" || fmt != "cnf" ||
          vars < 0 || clauses < 0)
        throw ParseError("malformed header" + at() + ": " + line);
      std::string extra;
      if (header >> extra) throw ParseError("trailing tokens in header" + at());
      f.num_vars = static_cast<int>(vars);
      declared_clauses = clauses;
      have_header = true;
      continue;
    }

    if (!have_header) throw ParseError("clause before header" + at());
    std::istringstream body(line);
    long lit = 0;
    while (body >> lit) {
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause" + at());
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      long var = lit < 0 ? -lit : lit;
      if (var > f.num_vars)
        throw ParseError("literal out of range" + at() + ": " +
                         std::to_string(lit));
      current.push_back({static_cast<int>(var), lit < 0});
    }
    if (!body.eof()) throw ParseError("bad token" + at() + ": " + line);
  }

  if (!have_header) throw ParseError("missing DIMACS header");
  if (!current.empty()) throw ParseError("unterminated clause at end of input");
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw ParseError("clause count mismatch: header declares " +
                     std::to_string(declared_clauses) + ", found " +
                     std::to_string(f.clauses.size()));
  if (f.clauses.empty()) throw ParseError("formula has no clauses");
  return f;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (const Literal& lit : clause)
      out << (lit.negated ? -lit.variable : lit.variable) << ' ';
    out << "0\n";
  }
}

bool eval_cnf(const CnfFormula& f, const BitState& assignment) {
  if (assignment.size() != static_cast<std::size_t>(f.num_vars))
    throw LengthMismatchError(
        "assignment has " + std::to_string(assignment.size()) + " bits, formula has " +
        std::to_string(f.num_vars) + " variables");
  for (const auto& clause : f.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause) {
      if (assignment.bit(lit.variable - 1) != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

struct Formula::Node {
  Kind kind;
  Literal lit{1, false};
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;

  int depth() const {
    if (kind == Kind::Leaf) return 0;
    return 1 + std::max(left->depth(), right->depth());
  }

  int max_variable() const {
    if (kind == Kind::Leaf) return lit.variable;
    return std::max(left->max_variable(), right->max_variable());
  }

  bool eval(const BitState& a) const {
    switch (kind) {
      case Kind::Leaf:
        if (static_cast<std::size_t>(lit.variable) > a.size())
          throw LengthMismatchError("assignment too short for variable " +
                                    std::to_string(lit.variable));
        return a.bit(lit.variable - 1) != lit.negated;
      case Kind::And:
        return left->eval(a) && right->eval(a);
      case Kind::Or:
        return left->eval(a) || right->eval(a);
    }
    throw Error("unreachable formula kind");
  }
};

Formula Formula::leaf(Literal lit) {
  if (lit.variable < 1) throw IndexError("leaf variable must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Leaf;
  node->lit = lit;
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->left = std::move(left.node_);
  node->right = std::move(right.node_);
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->left = std::move(left.node_);
  node->right = std::move(right.node_);
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Literal& Formula::literal() const {
  if (node_->kind != Kind::Leaf) throw Error("literal() called on a non-leaf");
  return node_->lit;
}

Formula Formula::left() const {
  if (node_->kind == Kind::Leaf) throw Error("left() called on a leaf");
  return Formula(node_->left);
}

Formula Formula::right() const {
  if (node_->kind == Kind::Leaf) throw Error("right() called on a leaf");
  return Formula(node_->right);
}

int Formula::depth() const { return node_->depth(); }

int Formula::max_variable() const { return node_->max_variable(); }

bool Formula::eval(const BitState& assignment) const {
  return node_->eval(assignment);
}

namespace {

// Balanced tree over a non-empty list; the left half takes the ceiling.
Formula build_clause_tree(std::span<const Literal> lits) {
  if (lits.size() == 1) return Formula::leaf(lits[0]);
  std::size_t mid = (lits.size() + 1) / 2;
  return Formula::disjunction(build_clause_tree(lits.first(mid)),
                              build_clause_tree(lits.subspan(mid)));
}

Formula build_and_tree(std::span<const Formula> parts) {
  if (parts.size() == 1) return parts[0];
  std::size_t mid = (parts.size() + 1) / 2;
  return Formula::conjunction(build_and_tree(parts.first(mid)),
                              build_and_tree(parts.subspan(mid)));
}

}  // namespace

Formula cnf_to_formula(const CnfFormula& f) {
  validate_cnf(f);
  std::vector<Formula> clause_trees;
  clause_trees.reserve(f.clauses.size());
  for (const auto& clause : f.clauses)
    clause_trees.push_back(build_clause_tree(clause));
  return build_and_tree(clause_trees);
}

}  // namespace rev
