#include "uavfog/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "uavfog/rng.hpp"

namespace uavfog {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Config, what);
}

const std::vector<bool>& alive_or_all(const SearchOptions& options,
                                      const Scenario& scenario,
                                      std::vector<bool>& storage) {
  if (options.alive.empty()) {
    storage.assign(scenario.n_uavs, true);
    return storage;
  }
  if (options.alive.size() != scenario.n_uavs) {
    throw Error(ErrorKind::Structural, "alive mask length must equal n_uavs");
  }
  return options.alive;
}

// Index of the highest fitness; lowest index wins ties.
std::size_t argmax(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

PlacementVector random_placement(const CounterRng& rng, Stream stream,
                                 std::uint32_t agent, const Scenario& scenario) {
  PlacementVector v(scenario.n_uavs);
  for (std::size_t i = 0; i < scenario.n_uavs; ++i) {
    const auto d = static_cast<std::uint32_t>(2 * i);
    v.set_position(i, {rng.uniform(stream, 0, agent, d) * scenario.area_width,
                       rng.uniform(stream, 0, agent, d + 1) * scenario.area_height});
  }
  return v;
}

TraceEntry make_entry(std::size_t iter, double best_fitness,
                      const FitnessReport& report, double a,
                      MechanismCounts counts) {
  return {iter, best_fitness, report.nc, report.ncv1, report.ncv2, a, counts};
}

}  // namespace

void WoaParams::validate() const {
  require(pop_size >= 2, "woa pop_size must be >= 2");
  require(max_iters >= 1, "woa max_iters must be >= 1");
  require(std::isfinite(spiral_b) && spiral_b > 0.0, "woa spiral_b must be > 0");
  require(stagnation_window >= 1, "woa stagnation_window must be >= 1");
  require(std::isfinite(a_boost) && a_boost >= 0.0, "woa a_boost must be >= 0");
  require(threads >= 1, "woa threads must be >= 1");
}

void PsoParams::validate() const {
  require(pop_size >= 2, "pso pop_size must be >= 2");
  require(max_iters >= 1, "pso max_iters must be >= 1");
  require(std::isfinite(inertia), "pso inertia must be finite");
  require(std::isfinite(cognitive) && cognitive >= 0.0, "pso cognitive must be >= 0");
  require(std::isfinite(social) && social >= 0.0, "pso social must be >= 0");
  require(std::isfinite(velocity_clamp) && velocity_clamp > 0.0,
          "pso velocity_clamp must be > 0");
  require(threads >= 1, "pso threads must be >= 1");
}

std::vector<FitnessReport> evaluate_population(
    const std::vector<PlacementVector>& agents, const Scenario& scenario,
    const std::vector<bool>& alive, std::size_t threads) {
  std::vector<FitnessReport> out(agents.size());
  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), agents.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < agents.size(); ++i) {
      out[i] = fitness_h(agents[i], scenario, alive);
    }
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < agents.size(); i += workers) {
          out[i] = fitness_h(agents[i], scenario, alive);
        }
      });
    }
  }
  return out;
}

SearchState init_population(const Scenario& scenario, const WoaParams& params,
                            const SearchOptions& options) {
  params.validate();
  std::vector<bool> storage;
  const auto& alive = alive_or_all(options, scenario, storage);
  const CounterRng rng(params.seed);

  SearchState state;
  state.agents.reserve(params.pop_size);
  for (std::size_t k = 0; k < params.pop_size; ++k) {
    state.agents.push_back(random_placement(
        rng, Stream::Population, static_cast<std::uint32_t>(k), scenario));
  }
  if (options.warm_start) {
    require_placement_shape(*options.warm_start, scenario);
    state.agents[0] = *options.warm_start;
    state.agents[0].clamp_to(scenario);
  }

  const auto reports = evaluate_population(state.agents, scenario, alive, params.threads);
  state.fitness.resize(reports.size());
  for (std::size_t k = 0; k < reports.size(); ++k) state.fitness[k] = reports[k].h_value;
  const std::size_t best = argmax(state.fitness);
  state.best = state.agents[best];
  state.best_report = reports[best];
  state.best_fitness = state.fitness[best];
  state.trace.push_back(make_entry(0, state.best_fitness, state.best_report,
                                   coefficient_a(state, params), {}));
  return state;
}

double linear_coefficient(std::size_t iter, std::size_t max_iters) noexcept {
  const double span = max_iters > 1 ? static_cast<double>(max_iters - 1) : 1.0;
  return std::clamp(2.0 * (1.0 - static_cast<double>(iter) / span), 0.0, 2.0);
}

double adaptive_schedule(const SearchState& state, const WoaParams& params) noexcept {
  const double a_lin = linear_coefficient(state.iter, params.max_iters);
  const std::size_t stagnant = state.iter - state.last_improvement;
  if (stagnant >= params.stagnation_window) {
    return std::min(2.0, a_lin + params.a_boost);
  }
  return a_lin;
}

double coefficient_a(const SearchState& state, const WoaParams& params) noexcept {
  return params.adaptive ? adaptive_schedule(state, params)
                         : linear_coefficient(state.iter, params.max_iters);
}

MechanismCounts whale_move(std::span<const double> agent,
                           std::span<const double> best,
                           std::span<const double> random_agent,
                           const WhaleDraws& draws,
                           std::span<const double> a_per_coord,
                           double spiral_b, std::span<double> out) {
  const std::size_t dim = agent.size();
  if (best.size() != dim || random_agent.size() != dim || out.size() != dim ||
      a_per_coord.size() != dim) {
    throw Error(ErrorKind::Structural, "whale_move dimension mismatch");
  }
  MechanismCounts counts;
  if (draws.p >= 0.5) {
    const double factor = std::exp(spiral_b * draws.l) *
                          std::cos(2.0 * std::numbers::pi * draws.l);
    for (std::size_t d = 0; d < dim; ++d) {
      out[d] = std::abs(best[d] - agent[d]) * factor + best[d];
    }
    counts.spiral = dim;
    return counts;
  }
  const double C = 2.0 * draws.r2;
  for (std::size_t d = 0; d < dim; ++d) {
    const double a = a_per_coord[d];
    const double A = 2.0 * a * draws.r1 - a;
    if (std::abs(A) < 1.0) {
      out[d] = best[d] - A * std::abs(C * best[d] - agent[d]);
      ++counts.encircle;
    } else {
      out[d] = random_agent[d] - A * std::abs(C * random_agent[d] - agent[d]);
      ++counts.explore;
    }
  }
  return counts;
}

void woa_step(SearchState& state, const Scenario& scenario,
              const WoaParams& params, const SearchOptions& options) {
  std::vector<bool> storage;
  const auto& alive = alive_or_all(options, scenario, storage);
  const CounterRng rng(params.seed);
  const auto t = static_cast<std::uint32_t>(state.iter);
  const double a = coefficient_a(state, params);
  const std::size_t pop = state.agents.size();
  const std::size_t n = state.best.uav_count();
  const std::size_t dim = 2 * n;
  const bool focus = params.adaptive && params.focus_uavs > 0 && params.focus_uavs < n;

  std::vector<PlacementVector> next(pop, PlacementVector(n));
  std::vector<double> a_coord(dim, a);
  MechanismCounts total;
  for (std::size_t i = 0; i < pop; ++i) {
    const auto agent = static_cast<std::uint32_t>(i);
    WhaleDraws draws;
    draws.r1 = rng.uniform(Stream::WoaStep, t, agent, 0);
    draws.r2 = rng.uniform(Stream::WoaStep, t, agent, 1);
    draws.p = rng.uniform(Stream::WoaStep, t, agent, 2);
    draws.l = 2.0 * rng.uniform(Stream::WoaStep, t, agent, 3) - 1.0;
    const std::size_t partner =
        rng.below(Stream::WoaStep, t, agent, 4, static_cast<std::uint32_t>(pop));

    if (focus) {
      std::fill(a_coord.begin(), a_coord.end(), 0.0);
      const std::uint32_t k =
          1 + rng.below(Stream::WoaStep, t, agent, 5,
                        static_cast<std::uint32_t>(params.focus_uavs));
      for (std::uint32_t j = 0; j < k; ++j) {
        const std::size_t uav =
            rng.below(Stream::WoaStep, t, agent, 6 + j, static_cast<std::uint32_t>(n));
        a_coord[2 * uav] = a;
        a_coord[2 * uav + 1] = a;
      }
    }

    const MechanismCounts c =
        whale_move(state.agents[i].coords(), state.best.coords(),
                   state.agents[partner].coords(), draws, a_coord,
                   params.spiral_b, next[i].coords());
    total.encircle += c.encircle;
    total.explore += c.explore;
    total.spiral += c.spiral;
    next[i].clamp_to(scenario);
  }

  state.agents = std::move(next);
  const auto reports = evaluate_population(state.agents, scenario, alive, params.threads);
  for (std::size_t k = 0; k < pop; ++k) state.fitness[k] = reports[k].h_value;

  state.iter += 1;
  state.rng_cursor = state.iter;
  const std::size_t best = argmax(state.fitness);
  if (state.fitness[best] > state.best_fitness) {
    state.best = state.agents[best];
    state.best_report = reports[best];
    state.best_fitness = state.fitness[best];
    state.last_improvement = state.iter;
  }
  state.trace.push_back(make_entry(state.iter, state.best_fitness,
                                   state.best_report, coefficient_a(state, params),
                                   total));
}

OptimizerResult run_optimizer(const Scenario& scenario, const WoaParams& params,
                              const SearchOptions& options) {
  SearchState state = init_population(scenario, params, options);
  while (state.iter < params.max_iters) woa_step(state, scenario, params, options);
  return {std::move(state.best), state.best_report, std::move(state.trace)};
}

OptimizerResult run_pso_baseline(const Scenario& scenario,
                                 const PsoParams& params,
                                 const SearchOptions& options) {
  params.validate();
  std::vector<bool> storage;
  const auto& alive = alive_or_all(options, scenario, storage);
  const CounterRng rng(params.seed);
  const std::size_t pop = params.pop_size;
  const std::size_t dim = 2 * scenario.n_uavs;

  auto extent = [&](std::size_t d) {
    return d % 2 == 0 ? scenario.area_width : scenario.area_height;
  };

  std::vector<PlacementVector> x;
  std::vector<std::vector<double>> v(pop, std::vector<double>(dim));
  x.reserve(pop);
  for (std::size_t k = 0; k < pop; ++k) {
    const auto agent = static_cast<std::uint32_t>(k);
    x.push_back(random_placement(rng, Stream::PsoInit, agent, scenario));
    for (std::size_t d = 0; d < dim; ++d) {
      const double vmax = params.velocity_clamp * extent(d);
      const double u = rng.uniform(Stream::PsoInit, 1, agent, static_cast<std::uint32_t>(d));
      v[k][d] = (2.0 * u - 1.0) * vmax;
    }
  }
  if (options.warm_start) {
    require_placement_shape(*options.warm_start, scenario);
    x[0] = *options.warm_start;
    x[0].clamp_to(scenario);
  }

  auto reports = evaluate_population(x, scenario, alive, params.threads);
  std::vector<PlacementVector> pbest = x;
  std::vector<double> pbest_f(pop);
  for (std::size_t k = 0; k < pop; ++k) pbest_f[k] = reports[k].h_value;
  std::size_t g = argmax(pbest_f);
  PlacementVector gbest = x[g];
  FitnessReport gbest_report = reports[g];
  double gbest_f = pbest_f[g];

  std::vector<TraceEntry> trace;
  trace.reserve(params.max_iters + 1);
  trace.push_back(make_entry(0, gbest_f, gbest_report, params.inertia, {}));

  for (std::size_t it = 0; it < params.max_iters; ++it) {
    const auto t = static_cast<std::uint32_t>(it);
    for (std::size_t k = 0; k < pop; ++k) {
      const auto agent = static_cast<std::uint32_t>(k);
      for (std::size_t d = 0; d < dim; ++d) {
        const auto dd = static_cast<std::uint32_t>(d);
        const double r1 = rng.uniform(Stream::PsoStep, t, agent, dd);
        const double r2 = rng.uniform(Stream::PsoStep, t, agent, static_cast<std::uint32_t>(dim) + dd);
        const double vmax = params.velocity_clamp * extent(d);
        double vel = params.inertia * v[k][d] +
                     params.cognitive * r1 * (pbest[k][d] - x[k][d]) +
                     params.social * r2 * (gbest[d] - x[k][d]);
        vel = std::clamp(vel, -vmax, vmax);
        v[k][d] = vel;
        x[k][d] += vel;
      }
      x[k].clamp_to(scenario);
    }
    reports = evaluate_population(x, scenario, alive, params.threads);
    for (std::size_t k = 0; k < pop; ++k) {
      if (reports[k].h_value > pbest_f[k]) {
        pbest_f[k] = reports[k].h_value;
        pbest[k] = x[k];
      }
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < pop; ++k) {
      if (reports[k].h_value > reports[best].h_value) best = k;
    }
    if (reports[best].h_value > gbest_f) {
      gbest_f = reports[best].h_value;
      gbest = x[best];
      gbest_report = reports[best];
    }
    trace.push_back(make_entry(it + 1, gbest_f, gbest_report, params.inertia, {}));
  }
  return {std::move(gbest), gbest_report, std::move(trace)};
}

}  // namespace uavfog
