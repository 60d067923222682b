#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "uavfog/model.hpp"

namespace uavfog {

inline constexpr std::size_t kNoUav = std::numeric_limits<std::size_t>::max();

// Fog-fog link graph and user coverage for one placement at one timeframe.
//
// Dead UAVs (when an alive mask is supplied) carry no links, cover nobody
// and belong to no component, so `components` partitions the alive UAVs.
// With every UAV alive it partitions {0..n-1}.
struct Topology {
  std::size_t n = 0;
  std::vector<bool> alive;
  std::vector<std::vector<std::size_t>> adjacency;   // sorted ascending
  std::vector<std::vector<std::size_t>> components;  // sorted; ordered by first member
  std::vector<std::size_t> component_of;             // kNoUav for dead UAVs
  std::vector<std::size_t> largest_component;        // G*, sorted
  std::size_t largest_index = kNoUav;                 // into components

  std::vector<bool> user_cover_any;
  std::vector<bool> user_cover_largest;

  // Users within range of each UAV (active users only).
  std::vector<std::vector<std::size_t>> covered_users;
  // Each covered user is served by exactly one UAV: the nearest covering
  // member of G* if one exists, else the nearest covering UAV; ties go to
  // the lower index. serving_uav is kNoUav for uncovered users.
  std::vector<std::size_t> serving_uav;
  std::vector<std::vector<std::size_t>> served_users;

  bool in_largest(std::size_t uav) const noexcept {
    return largest_index != kNoUav && component_of[uav] == largest_index;
  }
  std::size_t alive_count() const noexcept;
};

Topology build_topology(const PlacementVector& placement,
                        const Scenario& scenario);
Topology build_topology(const PlacementVector& placement,
                        const Scenario& scenario,
                        const std::vector<bool>& alive);

// |G*|. Zero only when no UAV is alive.
std::size_t nc_largest(const Topology& topology) noexcept;

// |G*| / n, with n the full fleet size; 0 for an empty fleet.
double connectivity_ratio(const Topology& topology) noexcept;

}  // namespace uavfog
