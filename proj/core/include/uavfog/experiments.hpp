#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uavfog/config.hpp"

namespace uavfog {

// Paired WOA/PSO runs: pair k uses scenario seed base + k for both
// algorithms, and the optimizer seeds come from the respective sections.
struct ComparePair {
  std::uint64_t scenario_seed = 0;
  double woa_h = 0.0;
  double pso_h = 0.0;
  double woa_connectivity = 0.0;
  double pso_connectivity = 0.0;
};

struct CompareResult {
  std::vector<ComparePair> pairs;
  double woa_mean = 0.0;
  double woa_std = 0.0;
  double pso_mean = 0.0;
  double pso_std = 0.0;
};

CompareResult run_compare(const Config& config, std::size_t seeds);

enum class SweepParam { NUavs, NUsers, CommRadius };

// Accepts n_uavs, n_users, comm_radius and comm_radius_gamma.
SweepParam sweep_param_from_string(std::string_view name);
std::string_view to_string(SweepParam param) noexcept;

struct SweepPoint {
  double value = 0.0;
  double mean_h = 0.0;
  double mean_coverage = 0.0;      // NCV1 / m
  double mean_connectivity = 0.0;  // |G*| / n
  std::size_t seeds = 0;
};

struct SweepResult {
  SweepParam param = SweepParam::NUavs;
  std::vector<SweepPoint> points;
};

// Values from..to inclusive in `step` increments. Replicate r at point i
// uses scenario seed base + r and optimizer seed derive_seed(base, i, r).
// Explicit users in the config are dropped when sweeping n_users.
SweepResult run_sweep(const Config& config, SweepParam param, double from,
                      double to, double step, std::size_t seeds,
                      std::size_t threads = 1);

double mean_of(const std::vector<double>& values);
// Sample standard deviation; 0 for fewer than two values.
double stddev_of(const std::vector<double>& values);

}  // namespace uavfog
