#include <benchmark/benchmark.h>

#include <random>

#include "revequiv/circuit.hpp"
#include "revequiv/equiv.hpp"

namespace {

rev::Circuit random_circuit(unsigned width, std::size_t gates, unsigned seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](unsigned hi) {
    return std::uniform_int_distribution<unsigned>(0, hi - 1)(rng);
  };
  std::vector<rev::Gate> list;
  list.reserve(gates);
  while (list.size() < gates) {
    unsigned a = pick(width), b = pick(width), c = pick(width);
    if (a == b || a == c || b == c) continue;
    list.push_back(rng() & 1 ? rev::Gate::fredkin(a, b, c)
                             : rev::Gate::toffoli(a, b, c));
  }
  return rev::Circuit(width, std::move(list));
}

// Exhaustive sweep where the two circuits really are equivalent, so every
// input must be visited: worst case for the checker.
void BM_strong_equiv_exhaustive(benchmark::State& state) {
  const unsigned width = static_cast<unsigned>(state.range(0));
  const unsigned jobs = static_cast<unsigned>(state.range(1));
  rev::Circuit c1 = random_circuit(width, 500, 3);
  rev::Circuit pad = rev::concat(rev::invert_circuit(c1), c1);
  rev::Circuit c2 = rev::concat(c1, pad);

  rev::Exhaustive mode;
  mode.width_limit = width;
  mode.jobs = jobs;
  for (auto _ : state) {
    rev::EquivVerdict v = rev::strong_equiv(c1, c2, mode);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << width));
}

BENCHMARK(BM_strong_equiv_exhaustive)
    ->Args({14, 1})
    ->Args({18, 1})
    ->Args({18, 4})
    ->Args({20, 1})
    ->Unit(benchmark::kMillisecond);

// A single-gate difference is typically caught in the first block.
void BM_strong_equiv_early_exit(benchmark::State& state) {
  const unsigned width = 20;
  rev::Circuit c1 = random_circuit(width, 500, 5);
  std::vector<rev::Gate> gates = c1.gates();
  gates.push_back(rev::Gate::toffoli(0, 1, 2));
  rev::Circuit c2(width, std::move(gates));

  rev::Exhaustive mode;
  mode.width_limit = width;
  for (auto _ : state) {
    rev::EquivVerdict v = rev::strong_equiv(c1, c2, mode);
    benchmark::DoNotOptimize(v);
  }
}

BENCHMARK(BM_strong_equiv_early_exit)->Unit(benchmark::kMicrosecond);

void BM_random_trials(benchmark::State& state) {
  const unsigned width = 48;
  rev::Circuit c1 = random_circuit(width, 800, 9);
  rev::Circuit pad = rev::concat(rev::invert_circuit(c1), c1);
  rev::Circuit c2 = rev::concat(c1, pad);

  rev::RandomTrials mode;
  mode.trials = static_cast<std::uint64_t>(state.range(0));
  mode.seed = 1;
  for (auto _ : state) {
    rev::EquivVerdict v = rev::strong_equiv(c1, c2, mode);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_random_trials)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
