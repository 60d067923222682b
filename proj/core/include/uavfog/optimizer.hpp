#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uavfog/model.hpp"
#include "uavfog/objective.hpp"

namespace uavfog {

struct WoaParams {
  std::size_t pop_size = 30;
  std::size_t max_iters = 500;
  double spiral_b = 1.0;
  std::uint64_t seed = 0;
  bool adaptive = true;
  std::size_t stagnation_window = 25;
  double a_boost = 0.5;
  // With `adaptive`, each shrinking-encircling move hands the scheduled
  // coefficient to at most this many UAVs; every other coordinate gets
  // a = 0 and lands on X*. Zero disables focusing.
  std::size_t focus_uavs = 3;
  std::size_t threads = 1;  // workers for population evaluation

  void validate() const;
  friend bool operator==(const WoaParams&, const WoaParams&) = default;
};

// Global-best PSO with constriction-style defaults.
struct PsoParams {
  std::size_t pop_size = 30;
  std::size_t max_iters = 500;
  double inertia = 0.7298;
  double cognitive = 1.49618;
  double social = 1.49618;
  double velocity_clamp = 0.2;  // fraction of the axis extent
  std::uint64_t seed = 0;
  std::size_t threads = 1;

  void validate() const;
  friend bool operator==(const PsoParams&, const PsoParams&) = default;
};

// How many coordinate updates each mechanism produced in one iteration.
struct MechanismCounts {
  std::size_t encircle = 0;
  std::size_t explore = 0;
  std::size_t spiral = 0;

  friend bool operator==(const MechanismCounts&, const MechanismCounts&) = default;
};

// Row t describes the incumbent after t iterations. `a_value` is the
// coefficient in effect at iteration t (the value the next step uses);
// `mechanisms` counts the updates that produced row t (zero for row 0).
// PSO rows report the inertia weight in `a_value`.
struct TraceEntry {
  std::size_t iter = 0;
  double best_h = 0.0;
  std::size_t nc = 0;
  std::size_t ncv1 = 0;
  std::size_t ncv2 = 0;
  double a_value = 0.0;
  MechanismCounts mechanisms;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct SearchOptions {
  std::vector<bool> alive;                  // empty: every UAV alive
  std::optional<PlacementVector> warm_start;  // replaces agent 0
};

struct SearchState {
  std::vector<PlacementVector> agents;
  std::vector<double> fitness;
  PlacementVector best;
  FitnessReport best_report;
  double best_fitness = 0.0;
  std::size_t iter = 0;
  std::size_t last_improvement = 0;
  std::vector<TraceEntry> trace;
  std::uint64_t rng_cursor = 0;  // next counter row in the step stream
};

struct OptimizerResult {
  PlacementVector best;
  FitnessReport report;
  std::vector<TraceEntry> trace;
};

// Evaluates H for every agent; deterministic for any thread count.
std::vector<FitnessReport> evaluate_population(
    const std::vector<PlacementVector>& agents, const Scenario& scenario,
    const std::vector<bool>& alive, std::size_t threads);

SearchState init_population(const Scenario& scenario, const WoaParams& params,
                            const SearchOptions& options = {});

// a(t) = 2 (1 - t / (T - 1)) clamped to [0, 2], T = max_iters, so that the
// final step runs with a = 0.
double linear_coefficient(std::size_t iter, std::size_t max_iters) noexcept;

// Stagnation-triggered exploration boost: after `stagnation_window`
// iterations without a strict improvement, a = min(2, a_lin + a_boost).
double adaptive_schedule(const SearchState& state, const WoaParams& params) noexcept;

// Coefficient in effect at the state's iteration for either schedule.
double coefficient_a(const SearchState& state, const WoaParams& params) noexcept;

// Per-agent random inputs for one WOA move: A = 2 a r1 - a and C = 2 r2,
// with `a` taken per coordinate.
struct WhaleDraws {
  double p = 0.0;
  double l = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

// Moves one agent. With p < 0.5 each coordinate follows shrinking
// encircling of `best` when |A| < 1 and exploration around `random_agent`
// otherwise; with p >= 0.5 every coordinate follows the log spiral around
// `best`. No clamping is applied here.
MechanismCounts whale_move(std::span<const double> agent,
                           std::span<const double> best,
                           std::span<const double> random_agent,
                           const WhaleDraws& draws,
                           std::span<const double> a_per_coord,
                           double spiral_b, std::span<double> out);

// One synchronous WOA generation: positions are computed from the current
// population, clamped, evaluated, and X* is replaced on strict improvement.
void woa_step(SearchState& state, const Scenario& scenario,
              const WoaParams& params, const SearchOptions& options = {});

OptimizerResult run_optimizer(const Scenario& scenario, const WoaParams& params,
                              const SearchOptions& options = {});

OptimizerResult run_pso_baseline(const Scenario& scenario,
                                 const PsoParams& params,
                                 const SearchOptions& options = {});

}  // namespace uavfog
