#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "uavfog/energy_params.hpp"
#include "uavfog/error.hpp"

namespace uavfog {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class CoverageMode {
  Ground2D,  // planar distance between UAV ground projection and user
  Slant3D,   // full 3D distance including the flight altitude
};

std::string_view to_string(CoverageMode mode) noexcept;
CoverageMode coverage_mode_from_string(std::string_view text);

struct UserNode {
  std::size_t id = 0;
  Point pos;
  bool active = true;

  friend bool operator==(const UserNode&, const UserNode&) = default;
};

struct UavNode {
  std::size_t id = 0;
  Point pos;
  double residual_energy = 0.0;
};

// One problem instance. Treated as an immutable value once validated; the
// lifetime simulator derives per-frame copies with updated user state.
struct Scenario {
  double area_width = 1000.0;
  double area_height = 1000.0;
  double altitude = 400.0;
  std::size_t n_uavs = 45;
  double comm_radius = 100.0;
  std::vector<UserNode> users;
  EnergyParams energy;
  double initial_energy = 1.08e6;
  std::uint64_t seed = 0;
  CoverageMode coverage_mode = CoverageMode::Ground2D;

  // Throws Error{Config} on any invariant violation.
  void validate() const;

  std::size_t user_count() const noexcept { return users.size(); }
  std::size_t active_user_count() const noexcept;
  Point clamp(Point p) const noexcept;
  bool contains(Point p) const noexcept;
};

// Candidate solution: 2n coordinates laid out as [x0, y0, x1, y1, ...].
class PlacementVector {
 public:
  PlacementVector() = default;
  explicit PlacementVector(std::size_t n_uavs) : coords_(2 * n_uavs, 0.0) {}
  explicit PlacementVector(std::vector<double> coords);
  static PlacementVector from_points(std::span<const Point> points);

  std::size_t uav_count() const noexcept { return coords_.size() / 2; }
  std::size_t dimension() const noexcept { return coords_.size(); }

  Point position(std::size_t uav) const;
  void set_position(std::size_t uav, Point p);
  std::vector<Point> points() const;

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  double& operator[](std::size_t i) noexcept { return coords_[i]; }

  // Projects every coordinate onto the scenario's area bounds.
  void clamp_to(const Scenario& scenario) noexcept;
  bool within(const Scenario& scenario) const noexcept;

  friend bool operator==(const PlacementVector&,
                         const PlacementVector&) = default;

 private:
  std::vector<double> coords_;
};

// Throws Error{Structural} unless the placement has 2 * n_uavs coordinates.
void require_placement_shape(const PlacementVector& placement,
                             const Scenario& scenario);

double ground_distance(Point a, Point b) noexcept;
double slant_distance(Point uav, Point user, double altitude) noexcept;

// Coverage predicate on raw positions; boundary equality counts as covered.
bool in_coverage(Point uav, Point user, const Scenario& scenario) noexcept;

// Inactive users are never covered.
bool covers_user(const UavNode& uav, const UserNode& user,
                 const Scenario& scenario) noexcept;

// UAVs share one altitude, so links use planar distance. Throws
// Error{Structural} when both arguments carry the same id.
bool uavs_linked(const UavNode& a, const UavNode& b, double comm_radius);

}  // namespace uavfog
