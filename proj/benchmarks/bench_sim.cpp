#include <benchmark/benchmark.h>

#include <random>

#include "revequiv/circuit.hpp"

namespace {

rev::Circuit random_circuit(unsigned width, std::size_t gates) {
  std::mt19937_64 rng(42);
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

void BM_simulate(benchmark::State& state) {
  const unsigned width = static_cast<unsigned>(state.range(0));
  const std::size_t gates = static_cast<std::size_t>(state.range(1));
  rev::Circuit c = random_circuit(width, gates);
  rev::BitState input(width);
  for (unsigned w = 0; w < width; w += 3) input.set_bit(w, true);

  for (auto _ : state) {
    rev::BitState out = rev::simulate(c, input);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * gates);
}

BENCHMARK(BM_simulate)->Args({8, 100})->Args({20, 1000})->Args({20, 10000});

void BM_invert(benchmark::State& state) {
  rev::Circuit c = random_circuit(20, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    rev::Circuit inv = rev::invert_circuit(c);
    benchmark::DoNotOptimize(inv);
  }
}

BENCHMARK(BM_invert)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
