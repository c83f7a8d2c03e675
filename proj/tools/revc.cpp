// revc: compile CNF formulas to reversible-circuit gadgets and check
// circuits for strong or weak equivalence.
//
// Exit codes: 0 success / equivalent / unsatisfiable, 1 inequivalent /
// satisfiable, 2 usage or input error, 3 unknown verdict or resource
// limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "revequiv/bp.hpp"
#include "revequiv/circuit.hpp"
#include "revequiv/compile.hpp"
#include "revequiv/equiv.hpp"
#include "revequiv/errors.hpp"
#include "revequiv/formula.hpp"
#include "revequiv/perm5.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiffers = 1;
constexpr int kExitError = 2;
constexpr int kExitLimit = 3;

// The compiled program has 4^depth instructions in the worst case; refuse
// formulas whose bound cannot fit in memory.
constexpr int kMaxFormulaDepth = 13;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rev::Error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw rev::Error("cannot write " + path);
  return out;
}

rev::CnfFormula read_cnf(const std::string& path) {
  std::ifstream in = open_input(path);
  return rev::parse_dimacs(in);
}

rev::Circuit read_circuit(const std::string& path) {
  std::ifstream in = open_input(path);
  return rev::parse_circuit(in);
}

void guard_formula_depth(const rev::Formula& f) {
  if (f.depth() > kMaxFormulaDepth)
    throw rev::LimitExceededError(
        "formula depth " + std::to_string(f.depth()) + " exceeds the limit of " +
        std::to_string(kMaxFormulaDepth));
}

struct CompileArgs {
  std::string cnf_path;
  std::string out_path;
  std::string emit = "fredkin";
};

int cmd_compile(const CompileArgs& args) {
  rev::CnfFormula f = read_cnf(args.cnf_path);
  guard_formula_depth(rev::cnf_to_formula(f));
  rev::GadgetBuild build = rev::build_unsat_gadget(f);
  if (args.emit == "toffoli")
    build.circuit = rev::fredkin_to_toffoli(build.circuit);

  std::ofstream out = open_output(args.out_path);
  rev::write_gadget(out, build);

  std::cout << "OK n=" << build.layout.num_inputs
            << " width=" << build.circuit.width()
            << " gates=" << build.circuit.size()
            << " bp_length=" << build.bp_length << '\n';
  return kExitOk;
}

struct CheckArgs {
  std::string path1;
  std::string path2;
  std::string mode = "exhaustive";
  std::uint64_t trials = 1u << 16;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::vector<std::size_t> weak;  // empty, or {n, m}
};

int cmd_check(const CheckArgs& args) {
  rev::Circuit c1 = read_circuit(args.path1);
  rev::Circuit c2 = read_circuit(args.path2);

  rev::CheckMode mode = rev::Exhaustive{.width_limit = 24, .jobs = args.jobs};
  if (args.mode == "random")
    mode = rev::RandomTrials{.trials = args.trials, .seed = args.seed};

  rev::EquivVerdict verdict =
      args.weak.empty()
          ? rev::strong_equiv(c1, c2, mode)
          : rev::weak_equiv(c1, c2, args.weak[0], args.weak[1], mode);

  switch (verdict.outcome) {
    case rev::Outcome::Equivalent:
      std::cout << "EQUIVALENT\n";
      return kExitOk;
    case rev::Outcome::Inequivalent:
      std::cout << "INEQUIVALENT witness=" << verdict.witness->to_string()
                << '\n';
      return kExitDiffers;
    case rev::Outcome::Unknown:
      std::cout << "UNKNOWN trials=" << verdict.trials << '\n';
      return kExitLimit;
  }
  return kExitError;
}

struct SimulateArgs {
  std::string path;
  std::string input;
};

int cmd_simulate(const SimulateArgs& args) {
  rev::Circuit c = read_circuit(args.path);
  rev::BitState out = rev::simulate(c, rev::BitState::from_string(args.input));
  std::cout << out.to_string() << '\n';
  return kExitOk;
}

struct BpArgs {
  std::string cnf_path;
  std::string out_path;
  std::string target = "(1 2 3 4 5)";
  bool verify = false;
};

int cmd_bp(const BpArgs& args) {
  rev::CnfFormula f = read_cnf(args.cnf_path);
  rev::Formula formula = rev::cnf_to_formula(f);
  guard_formula_depth(formula);
  rev::Perm5 target = rev::Perm5::parse(args.target);

  rev::BranchingProgram p = rev::barrington_compile(formula, target);
  p.num_inputs = std::max(p.num_inputs, static_cast<std::size_t>(f.num_vars));

  std::ofstream out = open_output(args.out_path);
  rev::write_bp(out, p);

  int depth = formula.depth();
  std::uint64_t bound = depth < 32 ? (std::uint64_t{1} << (2 * depth)) : 0;
  std::ostringstream line;
  line << "OK n=" << p.num_inputs << " length=" << p.instructions.size()
       << " depth=" << depth << " bound=" << bound;

  if (args.verify) {
    if (p.num_inputs > 16)
      throw rev::LimitExceededError(
          "verification sweeps every assignment; at most 16 inputs supported");
    bool always_identity = true;
    const std::uint64_t total = std::uint64_t{1} << p.num_inputs;
    for (std::uint64_t index = 0; index < total; ++index) {
      rev::BitState a = rev::BitState::from_index(p.num_inputs, index);
      rev::Perm5 value = rev::eval_bp(p, a);
      rev::Perm5 expect = formula.eval(a) ? target : rev::Perm5();
      if (value != expect) {
        std::cout << "VERIFY-FAILED assignment=" << a.to_string() << '\n';
        return kExitDiffers;
      }
      if (!value.is_identity()) always_identity = false;
    }
    line << " verified=" << total
         << " always_identity=" << (always_identity ? "yes" : "no");
  }

  std::cout << line.str() << '\n';
  return kExitOk;
}

struct SatArgs {
  std::string cnf_path;
};

int cmd_sat(const SatArgs& args) {
  rev::CnfFormula f = read_cnf(args.cnf_path);
  rev::SatResult result = rev::brute_force_sat(f);
  if (result.satisfiable) {
    std::cout << "SAT witness=" << result.witness->to_string() << '\n';
    return kExitDiffers;
  }
  std::cout << "UNSAT\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible-circuit compiler and equivalence checker"};
  app.require_subcommand(1);

  CompileArgs compile_args;
  CLI::App* compile = app.add_subcommand(
      "compile", "Compile a DIMACS CNF file into a satisfiability gadget");
  compile->add_option("cnf", compile_args.cnf_path, "DIMACS CNF input")
      ->required();
  compile->add_option("output", compile_args.out_path, "circuit file to write")
      ->required();
  compile->add_option("--emit", compile_args.emit, "gate set to emit")
      ->check(CLI::IsMember({"fredkin", "toffoli"}))
      ->capture_default_str();

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Check two circuit files for equivalence");
  check->add_option("circuit1", check_args.path1, "first circuit")->required();
  check->add_option("circuit2", check_args.path2, "second circuit")->required();
  check->add_option("--mode", check_args.mode, "checking strategy")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  check->add_option("--trials", check_args.trials, "random mode: sample count")
      ->capture_default_str();
  check->add_option("--seed", check_args.seed, "random mode: seed")
      ->capture_default_str();
  check->add_option("--jobs", check_args.jobs, "exhaustive mode: worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  check
      ->add_option("--weak", check_args.weak,
                   "weak equivalence with n data inputs and m data outputs")
      ->expected(2);

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run a circuit on one input bit string");
  simulate->add_option("circuit", sim_args.path, "circuit file")->required();
  simulate->add_option("input", sim_args.input, "input bits, wire 0 first")
      ->required();

  BpArgs bp_args;
  CLI::App* bp = app.add_subcommand(
      "bp", "Compile a DIMACS CNF file into a width-5 branching program");
  bp->add_option("cnf", bp_args.cnf_path, "DIMACS CNF input")->required();
  bp->add_option("output", bp_args.out_path, "program file to write")
      ->required();
  bp->add_option("--target", bp_args.target, "5-cycle the program produces")
      ->capture_default_str();
  bp->add_flag("--verify", bp_args.verify,
               "sweep every assignment and confirm the program's value");

  SatArgs sat_args;
  CLI::App* sat = app.add_subcommand(
      "sat", "Brute-force satisfiability of a DIMACS CNF file");
  sat->add_option("cnf", sat_args.cnf_path, "DIMACS CNF input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (compile->parsed()) return cmd_compile(compile_args);
    if (check->parsed()) return cmd_check(check_args);
    if (simulate->parsed()) return cmd_simulate(sim_args);
    if (bp->parsed()) return cmd_bp(bp_args);
    if (sat->parsed()) return cmd_sat(sat_args);
  } catch (const rev::LimitExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
