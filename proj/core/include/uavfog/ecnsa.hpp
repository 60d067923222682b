#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "uavfog/energy.hpp"
#include "uavfog/model.hpp"
#include "uavfog/topology.hpp"

namespace uavfog {

// Energy-conscious node swapping: after placement, UAVs that hold a lot of
// energy but serve few users trade positions with UAVs that are low on
// energy but carry a heavy load.

struct NodeRankings {
  std::vector<std::size_t> by_energy;    // residual, descending
  std::vector<std::size_t> by_coverage;  // served users, descending
};

// Orders alive UAVs; ties go to the lower index. Dead UAVs are omitted.
NodeRankings rank_nodes(const Topology& topology, const EnergyLedger& ledger);

struct SwapThresholds {
  // Partner must share a fog-fog link with the donor.
  bool neighbors_only = true;
  // A swap is admitted only if each UAV's travel energy is at most this.
  double benefit_margin_j = std::numeric_limits<double>::infinity();

  friend bool operator==(const SwapThresholds&, const SwapThresholds&) = default;
};

struct SwapPair {
  std::size_t uav_a = 0;  // high energy, light load
  std::size_t uav_b = 0;  // low energy, heavy load

  friend bool operator==(const SwapPair&, const SwapPair&) = default;
};

struct SwapRationale {
  std::size_t users_a = 0;
  std::size_t users_b = 0;
  double energy_a = 0.0;
  double energy_b = 0.0;
  double distance = 0.0;
  double travel_j = 0.0;  // per UAV
};

struct SwapPlan {
  std::vector<SwapPair> swaps;
  std::vector<SwapRationale> rationale;  // parallel to swaps
  std::vector<double> projected_travel;  // metres per UAV
};

// Median over alive UAVs of served-user count (mean of the middle pair for
// an even count). A UAV above it is high-density, below it low-density;
// the same split on residual energy defines high- and low-energy nodes.
double median_of(std::vector<double> values);

// Greedy pairing in ranking order: donors are visited by descending energy
// and take the first eligible receiver by descending load. Each UAV joins
// at most one swap.
SwapPlan select_swaps(const NodeRankings& rankings, const Topology& topology,
                      const EnergyLedger& ledger,
                      const PlacementVector& placement,
                      const EnergyParams& params,
                      const SwapThresholds& thresholds = {});

struct RepositionResult {
  PlacementVector placement;
  EnergyLedger ledger;
  std::vector<SwapPair> applied;
  std::vector<SwapPair> dropped;  // travel did not fit in one frame
  double nls_after = 0.0;         // residual energy summed over post-swap G*
};

// Exchanges positions for each feasible swap and charges both UAVs the
// travel energy of the straight-line trip.
RepositionResult apply_repositioning(const PlacementVector& placement,
                                     const SwapPlan& plan,
                                     const EnergyLedger& ledger,
                                     const Scenario& scenario);

}  // namespace uavfog
