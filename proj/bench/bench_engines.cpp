// Serial memoized recursion vs. layered OpenMP evaluation, and the serial
// vs. parallel brute-force oracle. Thread count follows OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include "permfe/engines.hpp"
#include "permfe/oracle.hpp"

using namespace permfe;

namespace {

void run_engine(benchmark::State& state, Engine e, int r, EvalMode mode) {
  const int n = static_cast<int>(state.range(0));
  auto scheme = make_scheme(e, r, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_length(*scheme, n, {mode, 0}));
  }
}

void BM_1243_r2_serial(benchmark::State& s) { run_engine(s, Engine::P1243, 2, EvalMode::Serial); }
void BM_1243_r2_layered(benchmark::State& s) { run_engine(s, Engine::P1243, 2, EvalMode::Layered); }
void BM_12354_r1_serial(benchmark::State& s) { run_engine(s, Engine::P12354, 1, EvalMode::Serial); }
void BM_12354_r1_layered(benchmark::State& s) { run_engine(s, Engine::P12354, 1, EvalMode::Layered); }
void BM_2341_r1_serial(benchmark::State& s) { run_engine(s, Engine::P2341, 1, EvalMode::Serial); }
void BM_2341_r1_layered(benchmark::State& s) { run_engine(s, Engine::P2341, 1, EvalMode::Layered); }

void run_oracle(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Permutation> taus{Permutation::parse("123"), Permutation::parse("132")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? brute_force_distribution(n, taus)
                                      : brute_force_distribution_serial(n, taus));
  }
}

void BM_oracle_serial(benchmark::State& s) { run_oracle(s, false); }
void BM_oracle_parallel(benchmark::State& s) { run_oracle(s, true); }

}  // namespace

BENCHMARK(BM_1243_r2_serial)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_1243_r2_layered)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_12354_r1_serial)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_12354_r1_layered)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_2341_r1_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_2341_r1_layered)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_serial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
