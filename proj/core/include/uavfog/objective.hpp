#pragma once

#include <cstddef>
#include <vector>

#include "uavfog/model.hpp"
#include "uavfog/topology.hpp"

namespace uavfog {

struct FitnessReport {
  std::size_t nc = 0;        // |G*|
  std::size_t ncv1 = 0;      // users covered by any UAV
  std::size_t ncv2 = 0;      // users covered by a member of G*
  double h_value = 0.0;      // ncv2 / m, m = all users (0 when m == 0)
  std::size_t m_active = 0;
  std::size_t m_total = 0;

  friend bool operator==(const FitnessReport&, const FitnessReport&) = default;
};

std::size_t coverage_global(const Topology& topology) noexcept;
std::size_t coverage_connected(const Topology& topology) noexcept;

FitnessReport make_report(const Topology& topology, const Scenario& scenario);

FitnessReport fitness_h(const PlacementVector& placement,
                        const Scenario& scenario);
FitnessReport fitness_h(const PlacementVector& placement,
                        const Scenario& scenario,
                        const std::vector<bool>& alive);

}  // namespace uavfog
