#include <benchmark/benchmark.h>

#include <random>

#include "revequiv/bp.hpp"
#include "revequiv/compile.hpp"
#include "revequiv/formula.hpp"

namespace {

rev::CnfFormula random_cnf(int num_vars, int num_clauses, unsigned seed) {
  std::mt19937_64 rng(seed);
  rev::CnfFormula f;
  f.num_vars = num_vars;
  for (int c = 0; c < num_clauses; ++c) {
    std::vector<rev::Literal> clause;
    int width = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < width; ++k) {
      clause.push_back({1 + static_cast<int>(rng() % num_vars), (rng() & 1) != 0});
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

void BM_barrington_compile(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  const int clauses = static_cast<int>(state.range(1));
  rev::CnfFormula cnf = random_cnf(vars, clauses, 7);
  rev::Formula f = rev::cnf_to_formula(cnf);
  const rev::Perm5 target = rev::Perm5::parse("(1 2 3 4 5)");

  for (auto _ : state) {
    rev::BranchingProgram p = rev::barrington_compile(f, target);
    benchmark::DoNotOptimize(p);
  }
  if (state.thread_index() == 0) {
    rev::BranchingProgram p = rev::barrington_compile(f, target);
    state.counters["bp_length"] =
        benchmark::Counter(static_cast<double>(p.instructions.size()));
  }
}

BENCHMARK(BM_barrington_compile)
    ->Args({4, 8})
    ->Args({8, 16})
    ->Args({12, 32});

void BM_unsat_gadget(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  const int clauses = static_cast<int>(state.range(1));
  rev::CnfFormula cnf = random_cnf(vars, clauses, 11);

  for (auto _ : state) {
    rev::GadgetBuild g = rev::build_unsat_gadget(cnf);
    benchmark::DoNotOptimize(g);
  }
  if (state.thread_index() == 0) {
    rev::GadgetBuild g = rev::build_unsat_gadget(cnf);
    state.counters["gates"] =
        benchmark::Counter(static_cast<double>(g.circuit.size()));
  }
}

BENCHMARK(BM_unsat_gadget)->Args({4, 8})->Args({8, 16});

}  // namespace

BENCHMARK_MAIN();
