#include "uavfog/objective.hpp"

#include <algorithm>

namespace uavfog {

std::size_t coverage_global(const Topology& topology) noexcept {
  return static_cast<std::size_t>(std::count(
      topology.user_cover_any.begin(), topology.user_cover_any.end(), true));
}

std::size_t coverage_connected(const Topology& topology) noexcept {
  return static_cast<std::size_t>(
      std::count(topology.user_cover_largest.begin(),
                 topology.user_cover_largest.end(), true));
}

FitnessReport make_report(const Topology& topology, const Scenario& scenario) {
  FitnessReport r;
  r.nc = nc_largest(topology);
  r.ncv1 = coverage_global(topology);
  r.ncv2 = coverage_connected(topology);
  r.m_total = scenario.users.size();
  r.m_active = scenario.active_user_count();
  r.h_value = r.m_total == 0 ? 0.0
                             : static_cast<double>(r.ncv2) /
                                   static_cast<double>(r.m_total);
  return r;
}

FitnessReport fitness_h(const PlacementVector& placement,
                        const Scenario& scenario) {
  return make_report(build_topology(placement, scenario), scenario);
}

FitnessReport fitness_h(const PlacementVector& placement,
                        const Scenario& scenario,
                        const std::vector<bool>& alive) {
  return make_report(build_topology(placement, scenario, alive), scenario);
}

}  // namespace uavfog
