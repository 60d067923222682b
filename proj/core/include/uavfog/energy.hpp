#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uavfog/energy_params.hpp"
#include "uavfog/model.hpp"
#include "uavfog/topology.hpp"

namespace uavfog {

enum class LinkDirection { Uplink, Downlink };

// Free-space LoS gain beta0 / (dx^2 + dy^2 + H^2). Throws Error{Domain}
// when the UAV sits exactly on the user at zero altitude.
double channel_gain(Point uav, Point user, double altitude, double beta0);

// Shannon rate in bit/s. Uplink uses P_e, downlink uses P_f.
double link_rate(LinkDirection direction, Point uav, Point user,
                 double altitude, const EnergyParams& params);

// Energy a UAV spends on one frame's worth of traffic with the given users:
// sum of P_e * input / R_up + P_r * output / R_down. Throws Error{Domain}
// on a non-positive or non-finite rate.
double comm_energy_frame(Point uav, std::span<const Point> users,
                         double altitude, const EnergyParams& params);

struct MotionEnergy {
  double travel_j = 0.0;
  double hover_j = 0.0;
  double total() const noexcept { return travel_j + hover_j; }
};

// Splits one frame between straight-line travel and hovering. Throws
// Error{Domain} when the trip does not fit inside the frame.
MotionEnergy motion_energy_frame(double travel_dist, const EnergyParams& params);

struct EnergyBreakdown {
  double hover_j = 0.0;
  double travel_j = 0.0;
  double comm_j = 0.0;

  double total() const noexcept { return hover_j + travel_j + comm_j; }
  EnergyBreakdown& operator+=(const EnergyBreakdown& o) noexcept {
    hover_j += o.hover_j;
    travel_j += o.travel_j;
    comm_j += o.comm_j;
    return *this;
  }
};

struct UavEnergy {
  double residual = 0.0;
  EnergyBreakdown frame;     // drawn during the latest update
  EnergyBreakdown consumed;  // drawn since the ledger was created
  bool alive = true;
};

// Per-UAV residual energy state. Breakdowns record energy actually drawn:
// when a UAV cannot afford a demand, each component is scaled so that the
// drawn total equals what was left, and the residual lands on exactly 0.
class EnergyLedger {
 public:
  EnergyLedger() = default;
  EnergyLedger(std::size_t n_uavs, double initial_energy);

  std::size_t size() const noexcept { return uavs_.size(); }
  const UavEnergy& operator[](std::size_t i) const { return uavs_.at(i); }
  std::span<const UavEnergy> uavs() const noexcept { return uavs_; }

  double initial_total() const noexcept { return initial_total_; }
  double total_residual() const noexcept;
  EnergyBreakdown total_consumed() const noexcept;
  EnergyBreakdown total_frame() const noexcept;
  std::vector<bool> alive_mask() const;
  std::size_t alive_count() const noexcept;

  // Draws `demand` from UAV i (or what is left of it) and adds it to the
  // current frame breakdown. Dead UAVs draw nothing. Returns the drawn part.
  EnergyBreakdown draw(std::size_t i, const EnergyBreakdown& demand);
  void begin_frame() noexcept;

  // Test hook for constructing uneven fleets.
  void set_residual(std::size_t i, double joules);

 private:
  std::vector<UavEnergy> uavs_;
  double initial_total_ = 0.0;
};

// Charges one frame of hover, travel and communication to every alive UAV.
// `per_uav_travel` holds the metres each UAV flies during the frame.
// Communication is charged for the users each UAV serves in `topology`.
EnergyLedger frame_energy_update(const EnergyLedger& ledger,
                                 std::span<const double> per_uav_travel,
                                 const Topology& topology,
                                 const PlacementVector& placement,
                                 const Scenario& scenario);

// Residual energy summed over the members of G*.
double network_lifespan_sum(const EnergyLedger& ledger,
                            const Topology& topology);

}  // namespace uavfog
