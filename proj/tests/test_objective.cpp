#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "uavfog/objective.hpp"
#include "uavfog/topology.hpp"

using namespace uavfog;

TEST_CASE("global coverage counts isolated UAVs") {
  const Scenario s = testing::small_scenario(3, 100.0, {{0, 0}, {520, 500}});
  const auto p = PlacementVector::from_points(std::vector<Point>{{0, 0}, {50, 0}, {500, 500}});
  const Topology t = build_topology(p, s);
  CHECK(coverage_global(t) == 2);
  CHECK(coverage_connected(t) == 1);
}

TEST_CASE("no users") {
  const Scenario s = testing::small_scenario(2, 100.0);
  const auto p = PlacementVector::from_points(std::vector<Point>{{0, 0}, {50, 0}});
  const FitnessReport r = fitness_h(p, s);
  CHECK(r.ncv1 == 0);
  CHECK(r.ncv2 == 0);
  CHECK(r.h_value == 0.0);
}

TEST_CASE("four users, three in range") {
  const Scenario s = testing::small_scenario(1, 100.0, {{10, 0}, {0, 99}, {70, 70}, {80, 80}});
  const auto p = PlacementVector::from_points(std::vector<Point>{{0, 0}});
  const auto oracle = testing::coverage_oracle(p, s);
  const FitnessReport r = fitness_h(p, s);
  CHECK(oracle.ncv1 == 3);
  CHECK(r.ncv1 == oracle.ncv1);
  CHECK(r.ncv2 == 3);
  CHECK(r.h_value == doctest::Approx(0.75));
}

TEST_CASE("covered by G* and an isolated UAV counts once") {
  const Scenario s = testing::small_scenario(3, 100.0, {{25, 0}, {300, 0}});
  const auto p = PlacementVector::from_points(std::vector<Point>{{0, 0}, {50, 0}, {25, 99}});
  const Topology t = build_topology(p, s);
  CHECK(t.largest_component == std::vector<std::size_t>{0, 1});
  CHECK(t.covered_users[2] == std::vector<std::size_t>{0});
  CHECK(coverage_connected(t) == 1);
}

TEST_CASE("example scenario user at (25,0) is connected-covered") {
  const Scenario s = testing::small_scenario(3, 100.0, {{25, 0}});
  const auto p = PlacementVector::from_points(std::vector<Point>{{0, 0}, {50, 0}, {500, 500}});
  CHECK(fitness_h(p, s).ncv2 == 1);
  CHECK(fitness_h(p, s).h_value == 1.0);
}

TEST_CASE("h divides by every user, active or not") {
  Scenario s = testing::small_scenario(1, 100.0, {{0, 0}, {10, 0}, {900, 900}, {20, 0}});
  s.users[1].active = false;
  const FitnessReport r = fitness_h(PlacementVector::from_points(std::vector<Point>{{0, 0}}), s);
  CHECK(r.m_active == 3);
  CHECK(r.m_total == 4);
  CHECK(r.ncv2 == 2);
  CHECK(r.h_value == 0.5);
}

TEST_CASE("property: metric ordering over random placements") {
  std::mt19937_64 gen(99);
  const Scenario s = testing::small_scenario(20, 100.0, testing::random_points(gen, 60, 1000, 1000));
  for (int k = 0; k < 1000; ++k) {
    const auto r = fitness_h(testing::random_placement(gen, 20, 1000, 1000), s);
    REQUIRE(r.ncv2 <= r.ncv1);
    REQUIRE(r.ncv1 <= r.m_active);
    REQUIRE(r.h_value >= 0.0);
    REQUIRE(r.h_value <= 1.0);
  }
}

TEST_CASE("property: exhaustive oracle on n=3, m=5") {
  std::mt19937_64 gen(5);
  for (int k = 0; k < 2000; ++k) {
    const Scenario s = testing::small_scenario(3, 100.0, testing::random_points(gen, 5, 300, 300), 300, 300);
    const auto p = testing::random_placement(gen, 3, 300, 300);
    const auto oracle = testing::coverage_oracle(p, s);
    const auto r = fitness_h(p, s);
    REQUIRE(r.nc == oracle.nc);
    REQUIRE(r.ncv1 == oracle.ncv1);
    REQUIRE(r.ncv2 == oracle.ncv2);
    REQUIRE(r.h_value == oracle.h);
  }
}

// Relabeling can only matter when two components tie for largest, because
// the tie-break is by index; such instances are skipped.
TEST_CASE("property: h is invariant under UAV relabeling") {
  std::mt19937_64 gen(17);
  const Scenario s = testing::small_scenario(10, 120.0, testing::random_points(gen, 50, 600, 600), 600, 600);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    auto pts = testing::random_placement(gen, 10, 600, 600).points();
    const Topology t = build_topology(PlacementVector::from_points(pts), s);
    const auto ties = std::count_if(t.components.begin(), t.components.end(),
                                    [&](const auto& c) { return c.size() == t.largest_component.size(); });
    if (ties > 1) continue;
    ++checked;
    const double h = fitness_h(PlacementVector::from_points(pts), s).h_value;
    std::shuffle(pts.begin(), pts.end(), gen);
    REQUIRE(fitness_h(PlacementVector::from_points(pts), s).h_value == h);
  }
  CHECK(checked > 100);
}
