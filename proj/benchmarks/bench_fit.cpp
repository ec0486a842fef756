#include <benchmark/benchmark.h>

#include <cmath>

#include "magic/magic.hpp"

namespace {

// Planted network with ~10 edges per node and roughly `edges` edges.
magic::TemporalTextNetwork planted(std::size_t edges) {
  magic::PlantedSpec spec;
  spec.blocks = 5;
  spec.block_size = edges / 25;
  const double pairs = 5.0 * static_cast<double>(spec.block_size) * (spec.block_size - 1) / 2.0;
  spec.eta_in = -std::log1p(-0.9 * static_cast<double>(edges) / pairs);
  spec.eta_out = spec.eta_in / 200.0;
  return magic::sample_planted(spec, magic::Mode::Net, 1).network;
}

void BM_Sweep(benchmark::State& state) {
  const auto net = planted(static_cast<std::size_t>(state.range(0)));
  magic::FitConfig cfg;
  cfg.K = static_cast<std::size_t>(state.range(1));
  magic::Fitter fitter(net, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(fitter.sweep());
  state.counters["edges"] = static_cast<double>(net.num_edges());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.num_edges()));
}
BENCHMARK(BM_Sweep)->Args({10000, 5})->Args({30000, 5})->Args({100000, 5})->Args({30000, 10})->Unit(benchmark::kMillisecond);

void BM_GradientEta(benchmark::State& state) {
  const auto net = planted(static_cast<std::size_t>(state.range(0)));
  const magic::ModelGraph graph(net, magic::Mode::Net);
  const auto F = magic::init_affiliations(net, 5, 1);
  const auto eta = magic::init_interactions(5);
  for (auto _ : state) benchmark::DoNotOptimize(magic::gradient_eta(graph, F, eta));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.num_edges()));
}
BENCHMARK(BM_GradientEta)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_LogLikelihood(benchmark::State& state) {
  const auto net = planted(static_cast<std::size_t>(state.range(0)));
  const magic::ModelGraph graph(net, magic::Mode::Net);
  const auto F = magic::init_affiliations(net, 5, 1);
  const auto eta = magic::init_interactions(5);
  for (auto _ : state) benchmark::DoNotOptimize(magic::log_likelihood(graph, F, eta));
}
BENCHMARK(BM_LogLikelihood)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
