#include "uavfog/ecnsa.hpp"

#include <algorithm>
#include <numeric>

namespace uavfog {

namespace {

std::vector<std::size_t> ordered_desc(const std::vector<std::size_t>& ids,
                                      const std::vector<double>& key) {
  std::vector<std::size_t> out = ids;
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return key[a] > key[b];
  });
  return out;
}

bool linked(const Topology& topology, std::size_t a, std::size_t b) {
  const auto& adj = topology.adjacency[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

}  // namespace

NodeRankings rank_nodes(const Topology& topology, const EnergyLedger& ledger) {
  if (ledger.size() != topology.n) {
    throw Error(ErrorKind::Structural, "ledger and topology sizes disagree");
  }
  std::vector<std::size_t> alive;
  std::vector<double> energy(topology.n), load(topology.n);
  for (std::size_t i = 0; i < topology.n; ++i) {
    energy[i] = ledger[i].residual;
    load[i] = static_cast<double>(topology.served_users[i].size());
    if (ledger[i].alive) alive.push_back(i);
  }
  return {ordered_desc(alive, energy), ordered_desc(alive, load)};
}

double median_of(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                 : 0.5 * (values[mid - 1] + values[mid]);
}

SwapPlan select_swaps(const NodeRankings& rankings, const Topology& topology,
                      const EnergyLedger& ledger,
                      const PlacementVector& placement,
                      const EnergyParams& params,
                      const SwapThresholds& thresholds) {
  const std::size_t n = topology.n;
  SwapPlan plan;
  plan.projected_travel.assign(n, 0.0);
  if (rankings.by_energy.empty()) return plan;

  std::vector<double> energies, loads;
  for (std::size_t i : rankings.by_energy) {
    energies.push_back(ledger[i].residual);
    loads.push_back(static_cast<double>(topology.served_users[i].size()));
  }
  const double median_energy = median_of(energies);
  const double median_load = median_of(loads);

  auto load = [&](std::size_t i) {
    return static_cast<double>(topology.served_users[i].size());
  };
  auto is_donor = [&](std::size_t i) {
    return ledger[i].residual > median_energy && load(i) < median_load;
  };
  auto is_receiver = [&](std::size_t i) {
    return ledger[i].residual < median_energy && load(i) > median_load;
  };

  std::vector<bool> used(n, false);
  for (std::size_t donor : rankings.by_energy) {
    if (!is_donor(donor)) continue;
    for (std::size_t receiver : rankings.by_coverage) {
      if (used[receiver] || receiver == donor || !is_receiver(receiver)) continue;
      if (thresholds.neighbors_only && !linked(topology, donor, receiver)) continue;
      const double dist =
          ground_distance(placement.position(donor), placement.position(receiver));
      const double travel_j = params.p_travel * dist / params.cruise_speed;
      if (travel_j > thresholds.benefit_margin_j) continue;

      used[donor] = used[receiver] = true;
      plan.swaps.push_back({donor, receiver});
      plan.rationale.push_back({topology.served_users[donor].size(),
                                topology.served_users[receiver].size(),
                                ledger[donor].residual, ledger[receiver].residual,
                                dist, travel_j});
      plan.projected_travel[donor] = dist;
      plan.projected_travel[receiver] = dist;
      break;
    }
  }
  return plan;
}

RepositionResult apply_repositioning(const PlacementVector& placement,
                                     const SwapPlan& plan,
                                     const EnergyLedger& ledger,
                                     const Scenario& scenario) {
  require_placement_shape(placement, scenario);
  if (ledger.size() != scenario.n_uavs) {
    throw Error(ErrorKind::Structural, "ledger size must equal n_uavs");
  }
  RepositionResult out{placement, ledger, {}, {}, 0.0};
  std::vector<bool> seen(scenario.n_uavs, false);
  for (const SwapPair& s : plan.swaps) {
    if (s.uav_a >= scenario.n_uavs || s.uav_b >= scenario.n_uavs ||
        s.uav_a == s.uav_b || seen[s.uav_a] || seen[s.uav_b]) {
      throw Error(ErrorKind::Structural, "swap plan reuses or misindexes a UAV");
    }
    seen[s.uav_a] = seen[s.uav_b] = true;
    if (!out.ledger[s.uav_a].alive || !out.ledger[s.uav_b].alive) {
      out.dropped.push_back(s);
      continue;
    }
    const Point pa = out.placement.position(s.uav_a);
    const Point pb = out.placement.position(s.uav_b);
    const double dist = ground_distance(pa, pb);
    MotionEnergy motion;
    try {
      motion = motion_energy_frame(dist, scenario.energy);
    } catch (const Error&) {
      out.dropped.push_back(s);
      continue;
    }
    out.placement.set_position(s.uav_a, pb);
    out.placement.set_position(s.uav_b, pa);
    out.ledger.draw(s.uav_a, {0.0, motion.travel_j, 0.0});
    out.ledger.draw(s.uav_b, {0.0, motion.travel_j, 0.0});
    out.applied.push_back(s);
  }
  const Topology after =
      build_topology(out.placement, scenario, out.ledger.alive_mask());
  out.nls_after = network_lifespan_sum(out.ledger, after);
  return out;
}

}  // namespace uavfog
