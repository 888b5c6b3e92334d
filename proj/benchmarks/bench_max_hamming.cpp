#include <benchmark/benchmark.h>

#include <vector>

#include "xham/max_hamming_p.hpp"
#include "xham/max_hamming_q.hpp"
#include "xham/oracle.hpp"
#include "xham/tau.hpp"

namespace {

using namespace xham;

// Sparse length-4 instances; denser ones are settled by propagation alone.
std::vector<Formula> corpus(int n) {
  std::vector<Formula> out;
  for (std::uint64_t seed = 0; seed < 16; ++seed) out.push_back(random_formula(n, n / 3, 4, seed));
  return out;
}

template <typename Solve>
void run_corpus(benchmark::State& state, Solve solve) {
  const auto fs = corpus(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& f : fs) benchmark::DoNotOptimize(solve(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}

void BM_Q(benchmark::State& state) {
  run_corpus(state, [](const Formula& f) { return max_hamming_q(f); });
}
BENCHMARK(BM_Q)->DenseRange(8, 24, 4);

void BM_P(benchmark::State& state) {
  run_corpus(state, [](const Formula& f) { return max_hamming_p(f); });
}
BENCHMARK(BM_P)->DenseRange(8, 16, 4);

void BM_Brute(benchmark::State& state) {
  run_corpus(state, [](const Formula& f) { return max_hamming_brute(f); });
}
BENCHMARK(BM_Brute)->DenseRange(8, 16, 4);

void BM_TauRoot(benchmark::State& state) {
  const auto rs = parse_branch_spec("7^2 3^6");
  for (auto _ : state) benchmark::DoNotOptimize(tau_root(rs));
}
BENCHMARK(BM_TauRoot);

}  // namespace

BENCHMARK_MAIN();
