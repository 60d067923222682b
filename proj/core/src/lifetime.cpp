#include "uavfog/lifetime.hpp"

#include <algorithm>
#include <cmath>

#include "uavfog/objective.hpp"
#include "uavfog/rng.hpp"

namespace uavfog {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Config, what);
}

bool probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

void churn_users(Scenario& scenario, std::size_t frame, double toggle_prob,
                 double sigma) {
  const CounterRng rng(scenario.seed);
  const auto f = static_cast<std::uint32_t>(frame);
  for (std::size_t k = 0; k < scenario.users.size(); ++k) {
    UserNode& u = scenario.users[k];
    const auto id = static_cast<std::uint32_t>(k);
    if (rng.uniform(Stream::Churn, f, id, 0) < toggle_prob) u.active = !u.active;
    if (sigma > 0.0) {
      u.pos = scenario.clamp({u.pos.x + sigma * rng.normal(Stream::Churn, f, id, 1),
                              u.pos.y + sigma * rng.normal(Stream::Churn, f, id, 3)});
    }
  }
}

}  // namespace

std::string_view to_string(SimEventKind kind) noexcept {
  switch (kind) {
    case SimEventKind::Death: return "death";
    case SimEventKind::Swap: return "swap";
    case SimEventKind::SwapDropped: return "swap_dropped";
    case SimEventKind::Reoptimization: return "reoptimization";
    case SimEventKind::ReoptSkipped: return "reopt_skipped";
  }
  return "unknown";
}

void SimConfig::validate() const {
  require(n_frames >= 1, "sim n_frames must be >= 1");
  require(std::isfinite(frame_duration) && frame_duration > 0.0,
          "sim frame_duration must be > 0");
  require(probability(user_toggle_prob), "sim user_toggle_prob must be in [0, 1]");
  require(std::isfinite(user_jitter_sigma) && user_jitter_sigma >= 0.0,
          "sim user_jitter_sigma must be >= 0");
  require(probability(reopt_trigger), "sim reopt_trigger must be in [0, 1]");
  require(probability(coverage_floor), "sim coverage_floor must be in [0, 1]");
  require(!std::isnan(swap.benefit_margin_j), "ecnsa benefit_margin_j must not be NaN");
}

SimState make_sim_state(const Scenario& scenario, const SimConfig& config,
                        const PlacementVector& placement) {
  config.validate();
  scenario.validate();
  require_placement_shape(placement, scenario);

  SimState s;
  s.scenario = scenario;
  s.scenario.energy.frame_duration = config.frame_duration;
  s.placement = placement;
  s.ledger = EnergyLedger(scenario.n_uavs, scenario.initial_energy);
  s.pending_travel.assign(scenario.n_uavs, 0.0);

  const Topology topo = build_topology(placement, s.scenario, s.ledger.alive_mask());
  const FitnessReport report = make_report(topo, s.scenario);
  FrameRecord r0;
  r0.frame = 0;
  r0.h = report.h_value;
  r0.connectivity_ratio = connectivity_ratio(topo);
  r0.alive = s.ledger.alive_count();
  r0.total_residual_j = s.ledger.total_residual();
  r0.nls_gstar_j = network_lifespan_sum(s.ledger, topo);

  s.result.frames.push_back(r0);
  s.result.h_initial = r0.h;
  s.result.initial_fleet_energy = s.ledger.initial_total();
  s.result.initial_placement = placement;
  s.result.final_placement = placement;
  s.result.final_residual = r0.total_residual_j;
  s.result.lifespan_frames = 0;
  return s;
}

void step_timeframe(SimState& s, const SimConfig& config, const WoaParams& woa) {
  const std::size_t frame = s.frame + 1;
  FrameRecord rec;
  rec.frame = frame;

  // (1) users toggle and drift
  churn_users(s.scenario, frame, config.user_toggle_prob, config.user_jitter_sigma);

  // (2) service topology over the UAVs alive at the start of the frame
  const Topology service = build_topology(s.placement, s.scenario, s.ledger.alive_mask());
  const FitnessReport report = make_report(service, s.scenario);
  rec.h = report.h_value;
  rec.connectivity_ratio = connectivity_ratio(service);

  // (3) hover, travel and communication charges; (4) deaths
  const std::size_t alive_before = s.ledger.alive_count();
  const std::vector<bool> mask_before = s.ledger.alive_mask();
  s.ledger = frame_energy_update(s.ledger, s.pending_travel, service, s.placement,
                                 s.scenario);
  std::fill(s.pending_travel.begin(), s.pending_travel.end(), 0.0);

  // (5) energy-conscious swapping on the post-charge state
  if (config.ecnsa_enabled && s.ledger.alive_count() > 0) {
    const Topology current =
        build_topology(s.placement, s.scenario, s.ledger.alive_mask());
    const NodeRankings ranks = rank_nodes(current, s.ledger);
    const SwapPlan plan = select_swaps(ranks, current, s.ledger, s.placement,
                                       s.scenario.energy, config.swap);
    RepositionResult moved = apply_repositioning(s.placement, plan, s.ledger, s.scenario);
    for (std::size_t k = 0; k < plan.swaps.size(); ++k) {
      const SwapPair& p = plan.swaps[k];
      const bool applied = std::find(moved.applied.begin(), moved.applied.end(), p) !=
                           moved.applied.end();
      s.result.events.push_back({frame,
                                 applied ? SimEventKind::Swap : SimEventKind::SwapDropped,
                                 p.uav_a, p.uav_b});
      if (applied) s.result.swaps.push_back({frame, p, plan.rationale[k]});
    }
    rec.swaps = moved.applied.size();
    s.placement = std::move(moved.placement);
    s.ledger = std::move(moved.ledger);
  }

  for (std::size_t i = 0; i < mask_before.size(); ++i) {
    if (mask_before[i] && !s.ledger[i].alive) {
      s.result.events.push_back({frame, SimEventKind::Death, i, kNoUav});
    }
  }
  rec.alive = s.ledger.alive_count();
  rec.deaths = alive_before - rec.alive;

  // (6) warm-started re-optimization when coverage has sagged
  if (config.reopt_trigger > 0.0 && rec.alive > 0 &&
      rec.h < config.reopt_trigger * s.result.h_initial) {
    WoaParams params = woa;
    params.seed = derive_seed(woa.seed, static_cast<std::uint32_t>(frame), 1);
    SearchOptions options;
    options.alive = s.ledger.alive_mask();
    options.warm_start = s.placement;
    const OptimizerResult r = run_optimizer(s.scenario, params, options);
    const double reach = s.scenario.energy.cruise_speed * s.scenario.energy.frame_duration;
    std::vector<double> travel(s.scenario.n_uavs, 0.0);
    bool feasible = true;
    for (std::size_t i = 0; i < travel.size(); ++i) {
      if (!s.ledger[i].alive) continue;
      travel[i] = ground_distance(s.placement.position(i), r.best.position(i));
      feasible = feasible && travel[i] <= reach;
    }
    if (feasible) {
      PlacementVector next = r.best;
      // Dead UAVs stay where they fell.
      for (std::size_t i = 0; i < travel.size(); ++i) {
        if (!s.ledger[i].alive) next.set_position(i, s.placement.position(i));
      }
      s.placement = std::move(next);
      s.pending_travel = std::move(travel);
      rec.reoptimized = true;
      s.result.events.push_back({frame, SimEventKind::Reoptimization, kNoUav, kNoUav});
    } else {
      s.result.events.push_back({frame, SimEventKind::ReoptSkipped, kNoUav, kNoUav});
    }
  }

  // (7) record
  const Topology end = build_topology(s.placement, s.scenario, s.ledger.alive_mask());
  rec.total_residual_j = s.ledger.total_residual();
  rec.nls_gstar_j = network_lifespan_sum(s.ledger, end);
  rec.consumed = s.ledger.total_frame();
  s.result.consumed += rec.consumed;
  s.result.frames.push_back(rec);
  s.result.final_residual = rec.total_residual_j;
  s.result.final_placement = s.placement;
  s.frame = frame;
}

SimResult run_simulation(const Scenario& scenario, const SimConfig& config,
                         const WoaParams& woa) {
  config.validate();
  Scenario frame_scenario = scenario;
  frame_scenario.energy.frame_duration = config.frame_duration;
  const OptimizerResult initial = run_optimizer(frame_scenario, woa);
  SimState state = make_sim_state(scenario, config, initial.best);
  while (state.frame < config.n_frames) step_timeframe(state, config, woa);
  state.result.lifespan_frames = lifespan_metric(state.result, config.coverage_floor);
  return std::move(state.result);
}

std::size_t lifespan_metric(const SimResult& result, double coverage_floor) {
  if (result.frames.empty()) return 0;
  const double threshold = coverage_floor * result.frames.front().h;
  for (std::size_t f = 1; f < result.frames.size(); ++f) {
    if (result.frames[f].h < threshold) return f;
  }
  return result.frames.size() - 1;
}

}  // namespace uavfog
