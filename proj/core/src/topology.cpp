#include "uavfog/topology.hpp"

#include <algorithm>
#include <deque>

namespace uavfog {

std::size_t Topology::alive_count() const noexcept {
  return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
}

Topology build_topology(const PlacementVector& placement,
                        const Scenario& scenario) {
  return build_topology(placement, scenario,
                        std::vector<bool>(scenario.n_uavs, true));
}

Topology build_topology(const PlacementVector& placement,
                        const Scenario& scenario,
                        const std::vector<bool>& alive) {
  require_placement_shape(placement, scenario);
  if (alive.size() != scenario.n_uavs) {
    throw Error(ErrorKind::Structural, "alive mask length must equal n_uavs");
  }

  const std::size_t n = scenario.n_uavs;
  const std::size_t m = scenario.users.size();
  const std::vector<Point> pos = placement.points();

  Topology t;
  t.n = n;
  t.alive = alive;
  t.adjacency.assign(n, {});
  t.component_of.assign(n, kNoUav);

  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!alive[j]) continue;
      if (ground_distance(pos[i], pos[j]) <= scenario.comm_radius) {
        t.adjacency[i].push_back(j);
        t.adjacency[j].push_back(i);
      }
    }
  }
  // Built in index order, so each list is already sorted.

  std::deque<std::size_t> frontier;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (!alive[seed] || t.component_of[seed] != kNoUav) continue;
    const std::size_t id = t.components.size();
    std::vector<std::size_t> members;
    t.component_of[seed] = id;
    frontier.push_back(seed);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      members.push_back(u);
      for (std::size_t v : t.adjacency[u]) {
        if (t.component_of[v] == kNoUav) {
          t.component_of[v] = id;
          frontier.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    t.components.push_back(std::move(members));
  }

  // Components are ordered by smallest member, so strict > keeps the tie
  // with the lowest contained index.
  for (std::size_t c = 0; c < t.components.size(); ++c) {
    if (t.largest_index == kNoUav ||
        t.components[c].size() > t.components[t.largest_index].size()) {
      t.largest_index = c;
    }
  }
  if (t.largest_index != kNoUav) {
    t.largest_component = t.components[t.largest_index];
  }

  t.user_cover_any.assign(m, false);
  t.user_cover_largest.assign(m, false);
  t.covered_users.assign(n, {});
  t.served_users.assign(n, {});
  t.serving_uav.assign(m, kNoUav);

  for (std::size_t u = 0; u < m; ++u) {
    const UserNode& user = scenario.users[u];
    if (!user.active) continue;
    std::size_t best_any = kNoUav, best_star = kNoUav;
    double d_any = 0.0, d_star = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || !in_coverage(pos[i], user.pos, scenario)) continue;
      t.covered_users[i].push_back(u);
      const double d = ground_distance(pos[i], user.pos);
      if (best_any == kNoUav || d < d_any) {
        best_any = i;
        d_any = d;
      }
      if (t.in_largest(i) && (best_star == kNoUav || d < d_star)) {
        best_star = i;
        d_star = d;
      }
    }
    t.user_cover_any[u] = best_any != kNoUav;
    t.user_cover_largest[u] = best_star != kNoUav;
    const std::size_t server = best_star != kNoUav ? best_star : best_any;
    t.serving_uav[u] = server;
    if (server != kNoUav) t.served_users[server].push_back(u);
  }
  return t;
}

std::size_t nc_largest(const Topology& topology) noexcept {
  return topology.largest_component.size();
}

double connectivity_ratio(const Topology& topology) noexcept {
  if (topology.n == 0) return 0.0;
  return static_cast<double>(nc_largest(topology)) /
         static_cast<double>(topology.n);
}

}  // namespace uavfog
