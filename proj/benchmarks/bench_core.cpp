#include <benchmark/benchmark.h>

#include "uavfog/config.hpp"
#include "uavfog/ecnsa.hpp"
#include "uavfog/energy.hpp"
#include "uavfog/objective.hpp"
#include "uavfog/optimizer.hpp"
#include "uavfog/topology.hpp"

using namespace uavfog;

namespace {

Scenario scenario_with(std::size_t n_uavs, std::size_t n_users) {
  Config c;
  c.scenario.n_uavs = n_uavs;
  c.scenario.n_users = n_users;
  c.scenario.seed = 1;
  return generate_scenario(c).scenario;
}

PlacementVector some_placement(const Scenario& s) {
  WoaParams p;
  p.pop_size = 2;
  return init_population(s, p).agents[0];
}

void BM_BuildTopology(benchmark::State& state) {
  const Scenario s = scenario_with(static_cast<std::size_t>(state.range(0)), 120);
  const PlacementVector x = some_placement(s);
  for (auto _ : state) benchmark::DoNotOptimize(build_topology(x, s));
}
BENCHMARK(BM_BuildTopology)->Arg(10)->Arg(45)->Arg(120);

void BM_Fitness(benchmark::State& state) {
  const Scenario s = scenario_with(45, static_cast<std::size_t>(state.range(0)));
  const PlacementVector x = some_placement(s);
  for (auto _ : state) benchmark::DoNotOptimize(fitness_h(x, s));
}
BENCHMARK(BM_Fitness)->Arg(30)->Arg(120)->Arg(200);

void BM_WoaStep(benchmark::State& state) {
  const Scenario s = scenario_with(45, 120);
  WoaParams p;
  p.max_iters = 1u << 30;
  SearchState st = init_population(s, p);
  for (auto _ : state) woa_step(st, s, p);
}
BENCHMARK(BM_WoaStep);

void BM_FrameEnergy(benchmark::State& state) {
  const Scenario s = scenario_with(45, 120);
  const PlacementVector x = some_placement(s);
  const Topology t = build_topology(x, s);
  const EnergyLedger ledger(s.n_uavs, s.initial_energy);
  const std::vector<double> travel(s.n_uavs, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(frame_energy_update(ledger, travel, t, x, s));
}
BENCHMARK(BM_FrameEnergy);

void BM_SelectSwaps(benchmark::State& state) {
  const Scenario s = scenario_with(45, 120);
  const PlacementVector x = some_placement(s);
  const Topology t = build_topology(x, s);
  EnergyLedger ledger(s.n_uavs, s.initial_energy);
  for (std::size_t i = 0; i < s.n_uavs; ++i) ledger.set_residual(i, 1e5 * static_cast<double>(i + 1));
  const NodeRankings r = rank_nodes(t, ledger);
  for (auto _ : state) benchmark::DoNotOptimize(select_swaps(r, t, ledger, x, s.energy));
}
BENCHMARK(BM_SelectSwaps);

}  // namespace

BENCHMARK_MAIN();
