#include "uavfog/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

namespace uavfog {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Config, what);
}

}  // namespace

void EnergyParams::validate() const {
  require(positive(p_hover), "p_hover must be > 0");
  require(positive(p_travel), "p_travel must be > 0");
  require(positive(cruise_speed), "cruise_speed must be > 0");
  require(positive(p_transmit_uav), "p_transmit_uav must be > 0");
  require(positive(p_receive_uav), "p_receive_uav must be > 0");
  require(positive(p_transmit_user), "p_transmit_user must be > 0");
  require(positive(p_transmit_uav_dl), "p_transmit_uav_dl must be > 0");
  require(positive(bandwidth), "bandwidth must be > 0");
  require(positive(beta0), "beta0 must be > 0");
  require(positive(noise_sigma2), "noise_sigma2 must be > 0");
  require(positive(input_data_bits), "input_data_bits must be > 0");
  require(positive(output_data_bits), "output_data_bits must be > 0");
  require(positive(frame_duration), "frame_duration must be > 0");
}

std::string_view to_string(CoverageMode mode) noexcept {
  return mode == CoverageMode::Ground2D ? "ground2d" : "slant3d";
}

CoverageMode coverage_mode_from_string(std::string_view text) {
  if (text == "ground2d") return CoverageMode::Ground2D;
  if (text == "slant3d") return CoverageMode::Slant3D;
  throw Error(ErrorKind::Config, "unknown coverage_mode '" +
                                     std::string(text) +
                                     "' (expected ground2d or slant3d)");
}

void Scenario::validate() const {
  require(positive(area_width), "area_width must be > 0");
  require(positive(area_height), "area_height must be > 0");
  require(std::isfinite(altitude) && altitude >= 0.0, "altitude_h must be >= 0");
  require(positive(comm_radius), "comm_radius_gamma must be > 0");
  require(n_uavs >= 1, "n_uavs must be >= 1");
  require(std::isfinite(initial_energy) && initial_energy >= 0.0,
          "initial_energy must be >= 0");
  energy.validate();

  std::unordered_set<std::size_t> ids;
  for (const auto& u : users) {
    require(ids.insert(u.id).second,
            "duplicate user id " + std::to_string(u.id));
    require(std::isfinite(u.pos.x) && std::isfinite(u.pos.y) && contains(u.pos),
            "user " + std::to_string(u.id) + " lies outside the area");
  }
}

std::size_t Scenario::active_user_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      users.begin(), users.end(), [](const UserNode& u) { return u.active; }));
}

Point Scenario::clamp(Point p) const noexcept {
  return {std::clamp(p.x, 0.0, area_width), std::clamp(p.y, 0.0, area_height)};
}

bool Scenario::contains(Point p) const noexcept {
  return p.x >= 0.0 && p.x <= area_width && p.y >= 0.0 && p.y <= area_height;
}

PlacementVector::PlacementVector(std::vector<double> coords)
    : coords_(std::move(coords)) {
  if (coords_.size() % 2 != 0) {
    throw Error(ErrorKind::Structural,
                "placement vector must hold an even number of coordinates");
  }
}

PlacementVector PlacementVector::from_points(std::span<const Point> points) {
  PlacementVector v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) v.set_position(i, points[i]);
  return v;
}

Point PlacementVector::position(std::size_t uav) const {
  if (uav >= uav_count()) {
    throw Error(ErrorKind::Structural, "UAV index out of range");
  }
  return {coords_[2 * uav], coords_[2 * uav + 1]};
}

void PlacementVector::set_position(std::size_t uav, Point p) {
  if (uav >= uav_count()) {
    throw Error(ErrorKind::Structural, "UAV index out of range");
  }
  coords_[2 * uav] = p.x;
  coords_[2 * uav + 1] = p.y;
}

std::vector<Point> PlacementVector::points() const {
  std::vector<Point> out(uav_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {coords_[2 * i], coords_[2 * i + 1]};
  }
  return out;
}

void PlacementVector::clamp_to(const Scenario& scenario) noexcept {
  for (std::size_t i = 0; i + 1 < coords_.size(); i += 2) {
    coords_[i] = std::clamp(coords_[i], 0.0, scenario.area_width);
    coords_[i + 1] = std::clamp(coords_[i + 1], 0.0, scenario.area_height);
  }
}

bool PlacementVector::within(const Scenario& scenario) const noexcept {
  for (std::size_t i = 0; i + 1 < coords_.size(); i += 2) {
    if (!scenario.contains({coords_[i], coords_[i + 1]})) return false;
  }
  return true;
}

void require_placement_shape(const PlacementVector& placement,
                             const Scenario& scenario) {
  if (placement.dimension() != 2 * scenario.n_uavs) {
    throw Error(ErrorKind::Structural,
                "placement has " + std::to_string(placement.dimension()) +
                    " coordinates, expected " +
                    std::to_string(2 * scenario.n_uavs));
  }
}

double ground_distance(Point a, Point b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

double slant_distance(Point uav, Point user, double altitude) noexcept {
  const double dx = uav.x - user.x;
  const double dy = uav.y - user.y;
  return std::sqrt(dx * dx + dy * dy + altitude * altitude);
}

bool in_coverage(Point uav, Point user, const Scenario& scenario) noexcept {
  const double d = scenario.coverage_mode == CoverageMode::Ground2D
                       ? ground_distance(uav, user)
                       : slant_distance(uav, user, scenario.altitude);
  return d <= scenario.comm_radius;
}

bool covers_user(const UavNode& uav, const UserNode& user,
                 const Scenario& scenario) noexcept {
  return user.active && in_coverage(uav.pos, user.pos, scenario);
}

bool uavs_linked(const UavNode& a, const UavNode& b, double comm_radius) {
  if (a.id == b.id) {
    throw Error(ErrorKind::Structural, "a UAV cannot link to itself");
  }
  return ground_distance(a.pos, b.pos) <= comm_radius;
}

}  // namespace uavfog
