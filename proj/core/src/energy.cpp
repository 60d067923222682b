#include "uavfog/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uavfog {

double channel_gain(Point uav, Point user, double altitude, double beta0) {
  const double dx = uav.x - user.x;
  const double dy = uav.y - user.y;
  const double denom = dx * dx + dy * dy + altitude * altitude;
  if (!(denom > 0.0)) {
    throw Error(ErrorKind::Domain,
                "channel gain is singular for coincident positions at H = 0");
  }
  return beta0 / denom;
}

double link_rate(LinkDirection direction, Point uav, Point user,
                 double altitude, const EnergyParams& params) {
  const double power = direction == LinkDirection::Uplink
                           ? params.p_transmit_uav
                           : params.p_transmit_uav_dl;
  const double gain = channel_gain(uav, user, altitude, params.beta0);
  return params.bandwidth * std::log2(1.0 + power * gain / params.noise_sigma2);
}

double comm_energy_frame(Point uav, std::span<const Point> users,
                         double altitude, const EnergyParams& params) {
  double total = 0.0;
  for (Point user : users) {
    const double up = link_rate(LinkDirection::Uplink, uav, user, altitude, params);
    const double down =
        link_rate(LinkDirection::Downlink, uav, user, altitude, params);
    if (!(up > 0.0) || !(down > 0.0) || !std::isfinite(up) ||
        !std::isfinite(down)) {
      throw Error(ErrorKind::Domain, "degenerate link rate");
    }
    total += params.p_transmit_uav * (params.input_data_bits / up) +
             params.p_receive_uav * (params.output_data_bits / down);
  }
  return total;
}

MotionEnergy motion_energy_frame(double travel_dist, const EnergyParams& params) {
  if (!(travel_dist >= 0.0) || !std::isfinite(travel_dist)) {
    throw Error(ErrorKind::Domain, "travel distance must be finite and >= 0");
  }
  const double travel_time = travel_dist / params.cruise_speed;
  if (travel_time > params.frame_duration) {
    throw Error(ErrorKind::Domain,
                "travel of " + std::to_string(travel_dist) +
                    " m does not fit in one frame");
  }
  return {params.p_travel * travel_time,
          params.p_hover * (params.frame_duration - travel_time)};
}

EnergyLedger::EnergyLedger(std::size_t n_uavs, double initial_energy)
    : uavs_(n_uavs), initial_total_(initial_energy * static_cast<double>(n_uavs)) {
  for (auto& u : uavs_) {
    u.residual = initial_energy;
    u.alive = initial_energy > 0.0;
  }
}

double EnergyLedger::total_residual() const noexcept {
  double s = 0.0;
  for (const auto& u : uavs_) s += u.residual;
  return s;
}

EnergyBreakdown EnergyLedger::total_consumed() const noexcept {
  EnergyBreakdown s;
  for (const auto& u : uavs_) s += u.consumed;
  return s;
}

EnergyBreakdown EnergyLedger::total_frame() const noexcept {
  EnergyBreakdown s;
  for (const auto& u : uavs_) s += u.frame;
  return s;
}

std::vector<bool> EnergyLedger::alive_mask() const {
  std::vector<bool> mask(uavs_.size());
  for (std::size_t i = 0; i < uavs_.size(); ++i) mask[i] = uavs_[i].alive;
  return mask;
}

std::size_t EnergyLedger::alive_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      uavs_.begin(), uavs_.end(), [](const UavEnergy& u) { return u.alive; }));
}

EnergyBreakdown EnergyLedger::draw(std::size_t i, const EnergyBreakdown& demand) {
  UavEnergy& u = uavs_.at(i);
  if (!u.alive) return {};
  EnergyBreakdown drawn = demand;
  const double want = demand.total();
  if (want >= u.residual) {
    const double scale = want > 0.0 ? u.residual / want : 0.0;
    drawn.hover_j *= scale;
    drawn.travel_j *= scale;
    drawn.comm_j *= scale;
    u.residual = 0.0;
    u.alive = false;
  } else {
    u.residual -= want;
  }
  u.frame += drawn;
  u.consumed += drawn;
  return drawn;
}

void EnergyLedger::begin_frame() noexcept {
  for (auto& u : uavs_) u.frame = {};
}

void EnergyLedger::set_residual(std::size_t i, double joules) {
  UavEnergy& u = uavs_.at(i);
  const double next = std::max(0.0, joules);
  initial_total_ += next - u.residual;
  u.residual = next;
  u.alive = u.residual > 0.0;
}

EnergyLedger frame_energy_update(const EnergyLedger& ledger,
                                 std::span<const double> per_uav_travel,
                                 const Topology& topology,
                                 const PlacementVector& placement,
                                 const Scenario& scenario) {
  const std::size_t n = ledger.size();
  if (per_uav_travel.size() != n || topology.n != n ||
      placement.uav_count() != n) {
    throw Error(ErrorKind::Structural,
                "ledger, travel, topology and placement sizes disagree");
  }
  EnergyLedger next = ledger;
  next.begin_frame();
  std::vector<Point> users;
  for (std::size_t i = 0; i < n; ++i) {
    if (!next[i].alive) continue;
    const MotionEnergy motion =
        motion_energy_frame(per_uav_travel[i], scenario.energy);
    users.clear();
    for (std::size_t u : topology.served_users[i]) {
      users.push_back(scenario.users[u].pos);
    }
    const double comm = comm_energy_frame(placement.position(i), users,
                                          scenario.altitude, scenario.energy);
    next.draw(i, {motion.hover_j, motion.travel_j, comm});
  }
  return next;
}

double network_lifespan_sum(const EnergyLedger& ledger,
                            const Topology& topology) {
  double sum = 0.0;
  for (std::size_t i : topology.largest_component) sum += ledger[i].residual;
  return sum;
}

}  // namespace uavfog
