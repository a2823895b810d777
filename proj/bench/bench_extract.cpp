#include <benchmark/benchmark.h>

#include <random>

#include "mw/proximity.hpp"

namespace {

std::vector<mw::Point> points(int n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> U(-100, 100);
  std::vector<mw::Point> p;
  for (int i = 0; i < n; ++i) p.push_back({U(g), U(g)});
  return p;
}

template <bool Parallel>
void BM_Extract(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  auto a = points(n, 1), b = points(n, 2);
  mw::Beta beta = st.range(1) ? mw::Beta(2.0) : mw::Beta::inf();
  for (auto _ : st) {
    auto g = Parallel ? mw::extract_mw_graphs(a, b, beta, true) : mw::extract_mw_graphs_serial(a, b, beta, true);
    benchmark::DoNotOptimize(g);
  }
  st.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_Extract<false>)->Name("serial")->ArgsProduct({{50, 100, 200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Extract<true>)->Name("openmp")->ArgsProduct({{50, 100, 200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
