// Microbenchmarks for the simulator kernels and the classical feedback path.
// Not part of the test suite; run mmq_benchmarks directly.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mmq/algorithms.hpp"
#include "mmq/game.hpp"
#include "mmq/oracles.hpp"
#include "mmq/sim.hpp"

namespace {

mmq::Code random_code(const mmq::GameInstance& game, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, game.k - 1);
  std::vector<mmq::Color> digits(static_cast<std::size_t>(game.n));
  for (mmq::Color& d : digits) d = digit(rng);
  return mmq::Code(game, digits);
}

void BM_QftOnOneRegister(benchmark::State& state) {
  const int registers = static_cast<int>(state.range(0));
  mmq::StateVector sv = mmq::init_basis_state(
      mmq::RegisterLayout(std::vector<int>(static_cast<std::size_t>(registers), 8)),
      std::vector<int>(static_cast<std::size_t>(registers), 0));
  for (auto _ : state) {
    mmq::apply_qft(sv, 0);
    mmq::apply_qft(sv, 0, /*inverse=*/true);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * 2 *
                          static_cast<long long>(sv.layout().size()));
}
BENCHMARK(BM_QftOnOneRegister)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_BlackPegOracleApply(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = 4;
  std::mt19937_64 rng(7);
  const mmq::GameInstance game(n, k);
  const mmq::OracleHandle handle = mmq::make_black_peg_oracle(random_code(game, rng), n + 1);
  mmq::StateVector sv = mmq::init_basis_state(handle.layout(),
                                              std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (int r = 0; r < n; ++r) mmq::apply_qft(sv, r);
  mmq::QueryLedger ledger;
  for (auto _ : state) {
    handle.apply(sv, ledger);
    handle.apply(sv, ledger, /*inverse=*/true);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * 2 *
                          static_cast<long long>(sv.layout().size()));
}
BENCHMARK(BM_BlackPegOracleApply)->Arg(4)->Arg(8)->Arg(16);

void BM_ExactSearchEndToEnd(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  const mmq::GameInstance game(3, k);
  const mmq::Code secret = random_code(game, rng);
  for (auto _ : state) {
    const mmq::RunResult result = mmq::adaptive_exact_grover(secret);
    benchmark::DoNotOptimize(result.success_probability);
  }
}
BENCHMARK(BM_ExactSearchEndToEnd)->Arg(4)->Arg(8)->Arg(16);

void BM_WhitePeg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(13);
  const mmq::GameInstance game(n, 10);
  const mmq::Code s = random_code(game, rng);
  const mmq::Code x = random_code(game, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmq::white_peg(s, x));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_WhitePeg)->Arg(16)->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
