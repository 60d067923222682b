#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "uavfog/model.hpp"

namespace testing {

inline uavfog::Scenario small_scenario(std::size_t n_uavs, double gamma,
                                       std::vector<uavfog::Point> users = {},
                                       double width = 1000.0, double height = 1000.0) {
  uavfog::Scenario s;
  s.area_width = width;
  s.area_height = height;
  s.n_uavs = n_uavs;
  s.comm_radius = gamma;
  for (std::size_t i = 0; i < users.size(); ++i) s.users.push_back({i, users[i], true});
  return s;
}

inline uavfog::PlacementVector random_placement(std::mt19937_64& gen, std::size_t n,
                                                double width, double height) {
  std::uniform_real_distribution<double> ux(0.0, width), uy(0.0, height);
  uavfog::PlacementVector p(n);
  for (std::size_t i = 0; i < n; ++i) p.set_position(i, {ux(gen), uy(gen)});
  return p;
}

inline std::vector<uavfog::Point> random_points(std::mt19937_64& gen, std::size_t m,
                                                double width, double height) {
  std::uniform_real_distribution<double> ux(0.0, width), uy(0.0, height);
  std::vector<uavfog::Point> out(m);
  for (auto& p : out) p = {ux(gen), uy(gen)};
  return out;
}

inline double hypot2(double dx, double dy) { return std::sqrt(dx * dx + dy * dy); }

}  // namespace testing
