#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavfog/ecnsa.hpp"
#include "uavfog/energy_params.hpp"
#include "uavfog/lifetime.hpp"
#include "uavfog/model.hpp"
#include "uavfog/optimizer.hpp"

namespace uavfog {

// Scenario section of the config document. When `users` is absent the
// generator draws n_users positions uniformly from the seeded stream.
struct ScenarioSpec {
  double area_width = 1000.0;
  double area_height = 1000.0;
  double altitude_h = 400.0;
  std::size_t n_uavs = 45;
  std::size_t n_users = 120;
  double comm_radius_gamma = 100.0;
  double initial_energy = 1.08e6;
  std::uint64_t seed = 0;
  CoverageMode coverage_mode = CoverageMode::Ground2D;
  std::optional<std::vector<UserNode>> users;
};

// The whole configuration document. Every section and key is optional;
// absent values take the defaults below and unknown keys are rejected.
struct Config {
  ScenarioSpec scenario;
  EnergyParams energy;
  WoaParams woa;
  PsoParams pso;
  SimConfig sim;

  void validate() const;
};

// Throws Error{Config} on malformed JSON, unknown keys, wrong types or
// invalid values.
Config parse_config(std::string_view json_text);
Config load_config(const std::string& path);

// Normalized document: every field present, keys in a fixed order. Parsing
// the output reproduces it byte for byte.
std::string to_json(const Config& config);

struct GeneratedScenario {
  Scenario scenario;
  std::vector<std::string> warnings;  // values outside the studied ranges
};

GeneratedScenario generate_scenario(const Config& config);

// Range checks against the studied parameter ranges: n_uavs 10-120, users
// 30-200, radius 90-200 m, altitude 300-600 m, timeframe 20-60 min.
std::vector<std::string> range_warnings(const Config& config);

// Copies the generated users back into the document so that it fully
// describes the instance.
Config with_users(Config config, const Scenario& scenario);

}  // namespace uavfog
