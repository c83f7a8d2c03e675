#include "revequiv/bp.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "revequiv/errors.hpp"

namespace rev {

Perm5 eval_bp(const BranchingProgram& p, const BitState& assignment) {
  if (assignment.size() != p.num_inputs)
    throw LengthMismatchError("assignment has " +
                              std::to_string(assignment.size()) +
                              " bits, program reads " +
                              std::to_string(p.num_inputs));
  Perm5 acc;
  for (const Instruction& ins : p.instructions) {
    if (ins.input_index < 1 || ins.input_index > p.num_inputs)
      throw IndexError("instruction reads input " +
                       std::to_string(ins.input_index) + " of " +
                       std::to_string(p.num_inputs));
    const Perm5& branch =
        assignment.bit(ins.input_index - 1) ? ins.if_one : ins.if_zero;
    acc = compose(acc, branch);
  }
  return acc;
}

BranchingProgram invert_bp(const BranchingProgram& p) {
  BranchingProgram out;
  out.num_inputs = p.num_inputs;
  out.instructions.reserve(p.instructions.size());
  for (auto it = p.instructions.rbegin(); it != p.instructions.rend(); ++it)
    out.instructions.push_back(
        {it->input_index, it->if_zero.inverse(), it->if_one.inverse()});
  return out;
}

BranchingProgram retarget_bp(const BranchingProgram& p, const Perm5& from,
                             const Perm5& to) {
  Perm5 tau = find_conjugator(from, to);
  BranchingProgram out;
  out.num_inputs = p.num_inputs;
  out.instructions.reserve(p.instructions.size());
  for (const Instruction& ins : p.instructions)
    out.instructions.push_back({ins.input_index, conjugate(ins.if_zero, tau),
                                conjugate(ins.if_one, tau)});
  return out;
}

namespace {

// Compilation works on a growing instruction list. Recursion appends to
// the tail; commutators re-emit an inverted copy of an already-emitted
// range.

void append_inverted_range(std::vector<Instruction>& out, std::size_t lo,
                           std::size_t hi) {
  for (std::size_t k = hi; k > lo; --k) {
    Instruction ins = out[k - 1];  // copy: push_back may reallocate
    out.push_back(
        {ins.input_index, ins.if_zero.inverse(), ins.if_one.inverse()});
  }
}

// Post-multiplies the program's value by sigma on every input, folding
// sigma into both branches of the final instruction so the length only
// grows when the program is empty.
void fold_tail(std::vector<Instruction>& out, std::size_t lo,
               const Perm5& sigma) {
  if (out.size() == lo) {
    out.push_back({1, sigma, sigma});
    return;
  }
  Instruction& last = out.back();
  last.if_zero = compose(last.if_zero, sigma);
  last.if_one = compose(last.if_one, sigma);
}

void compile_true(const Formula& f, const Perm5& target,
                  std::vector<Instruction>& out);

// Emits a program evaluating to target when f is false and to the
// identity when f is true: compile_true with the roles of the two leaf
// branches swapped, propagated through both node kinds by De Morgan.
void compile_false(const Formula& f, const Perm5& target,
                   std::vector<Instruction>& out) {
  switch (f.kind()) {
    case Formula::Kind::Leaf: {
      const Literal& lit = f.literal();
      std::size_t i = static_cast<std::size_t>(lit.variable);
      if (lit.negated)
        out.push_back({i, Perm5(), target});
      else
        out.push_back({i, target, Perm5()});
      break;
    }
    case Formula::Kind::And: {
      // not (g and h): compile the conjunction to target^-1, then fold a
      // trailing target so the value is the identity when both hold and
      // target otherwise.
      std::size_t lo = out.size();
      compile_true(f, target.inverse(), out);
      fold_tail(out, lo, target);
      break;
    }
    case Formula::Kind::Or: {
      // not (g or h) == (not g) and (not h): a commutator of the
      // children's negations.
      auto [gamma, delta] = find_and_pair(target);
      std::size_t lo = out.size();
      compile_false(f.left(), gamma, out);
      std::size_t mid = out.size();
      compile_false(f.right(), delta, out);
      std::size_t hi = out.size();
      append_inverted_range(out, lo, mid);
      append_inverted_range(out, mid, hi);
      break;
    }
  }
}

void compile_true(const Formula& f, const Perm5& target,
                  std::vector<Instruction>& out) {
  switch (f.kind()) {
    case Formula::Kind::Leaf: {
      const Literal& lit = f.literal();
      std::size_t i = static_cast<std::size_t>(lit.variable);
      if (lit.negated)
        out.push_back({i, target, Perm5()});
      else
        out.push_back({i, Perm5(), target});
      break;
    }
    case Formula::Kind::And: {
      // g and h: commutator of the children compiled to a pair whose
      // commutator is target. Either child evaluating to the identity
      // cancels everything.
      auto [gamma, delta] = find_and_pair(target);
      std::size_t lo = out.size();
      compile_true(f.left(), gamma, out);
      std::size_t mid = out.size();
      compile_true(f.right(), delta, out);
      std::size_t hi = out.size();
      append_inverted_range(out, lo, mid);
      append_inverted_range(out, mid, hi);
      break;
    }
    case Formula::Kind::Or: {
      // g or h == not ((not g) and (not h)): compile that conjunction to
      // target^-1, then fold a trailing target.
      auto [gamma, delta] = find_and_pair(target.inverse());
      std::size_t lo = out.size();
      compile_false(f.left(), gamma, out);
      std::size_t mid = out.size();
      compile_false(f.right(), delta, out);
      std::size_t hi = out.size();
      append_inverted_range(out, lo, mid);
      append_inverted_range(out, mid, hi);
      fold_tail(out, lo, target);
      break;
    }
  }
}

std::uint64_t pow4_saturating(int exponent) {
  if (exponent >= 32) return UINT64_MAX;
  return std::uint64_t{1} << (2 * exponent);
}

}  // namespace

BranchingProgram barrington_compile(const Formula& f, const Perm5& target) {
  if (!target.is_five_cycle())
    throw NotFiveCycleError("compile target " + target.to_string() +
                            " is not a 5-cycle");
  BranchingProgram p;
  compile_true(f, target, p.instructions);
  p.num_inputs = static_cast<std::size_t>(f.max_variable());

  std::uint64_t bound = pow4_saturating(f.depth());
  if (p.instructions.size() > bound)
    throw BoundExceededError("compiled length " +
                             std::to_string(p.instructions.size()) +
                             " exceeds 4^depth = " + std::to_string(bound));
  return p;
}

namespace {

// Splits the tail of an instruction line into permutation tokens: a token
// is a maximal run of parenthesized groups with no whitespace between
// them.
std::vector<std::string> split_perm_tokens(const std::string& text,
                                           const std::string& where) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ParseError("expected '(' in permutation" + where);
    std::string token;
    while (i < text.size() && text[i] == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string::npos)
        throw ParseError("unbalanced '('" + where);
      token.append(text, i, close - i + 1);
      i = close + 1;
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace

BranchingProgram parse_bp(std::istream& in) {
  bool have_header = false;
  BranchingProgram p;
  std::size_t declared_length = 0;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const auto at = [&] { return " at line " + std::to_string(lineno); };
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream tokens(line);

    if (!have_header) {
      std::string head;
      tokens >> head;
      long n = -1, l = -1;
      if (head != "bp" || !(tokens >> n >> l) || n < 0 || l < 0)
        throw ParseError("expected 'bp <inputs> <instructions>'" + at());
      std::string extra;
      if (tokens >> extra) throw ParseError("trailing tokens" + at());
      p.num_inputs = static_cast<std::size_t>(n);
      declared_length = static_cast<std::size_t>(l);
      have_header = true;
      continue;
    }

    long index = -1;
    if (!(tokens >> index))
      throw ParseError("expected instruction index" + at());
    if (index < 1 || static_cast<std::size_t>(index) > p.num_inputs)
      throw ParseError("input index " + std::to_string(index) +
                       " outside 1.." + std::to_string(p.num_inputs) + at());

    std::string rest;
    std::getline(tokens, rest);
    std::vector<std::string> perms = split_perm_tokens(rest, at());
    if (perms.size() != 2)
      throw ParseError("expected two permutations" + at());
    try {
      p.instructions.push_back({static_cast<std::size_t>(index),
                                Perm5::parse(perms[0]), Perm5::parse(perms[1])});
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + at());
    }
  }

  if (!have_header) throw ParseError("missing 'bp' header");
  if (p.instructions.size() != declared_length)
    throw ParseError("instruction count mismatch: header declares " +
                     std::to_string(declared_length) + ", found " +
                     std::to_string(p.instructions.size()));
  return p;
}

BranchingProgram parse_bp(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bp(in);
}

void write_bp(std::ostream& out, const BranchingProgram& p) {
  out << "bp " << p.num_inputs << ' ' << p.instructions.size() << '\n';
  for (const Instruction& ins : p.instructions)
    out << ins.input_index << ' ' << ins.if_zero.to_string() << ' '
        << ins.if_one.to_string() << '\n';
}

}  // namespace rev
