#include "uavfog/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>

#include "uavfog/objective.hpp"
#include "uavfog/optimizer.hpp"
#include "uavfog/rng.hpp"
#include "uavfog/topology.hpp"

namespace uavfog {

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double stddev_of(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double mu = mean_of(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

CompareResult run_compare(const Config& config, std::size_t seeds) {
  if (seeds == 0) throw Error(ErrorKind::Config, "compare needs at least one seed");
  CompareResult out;
  std::vector<double> woa_h, pso_h;
  for (std::size_t k = 0; k < seeds; ++k) {
    Config c = config;
    c.scenario.seed = config.scenario.seed + k;
    const Scenario s = generate_scenario(c).scenario;
    WoaParams woa = c.woa;
    woa.seed = config.woa.seed + k;
    PsoParams pso = c.pso;
    pso.seed = config.pso.seed + k;
    const OptimizerResult w = run_optimizer(s, woa);
    const OptimizerResult p = run_pso_baseline(s, pso);
    ComparePair pair;
    pair.scenario_seed = c.scenario.seed;
    pair.woa_h = w.report.h_value;
    pair.pso_h = p.report.h_value;
    pair.woa_connectivity = connectivity_ratio(build_topology(w.best, s));
    pair.pso_connectivity = connectivity_ratio(build_topology(p.best, s));
    woa_h.push_back(pair.woa_h);
    pso_h.push_back(pair.pso_h);
    out.pairs.push_back(pair);
  }
  out.woa_mean = mean_of(woa_h);
  out.woa_std = stddev_of(woa_h);
  out.pso_mean = mean_of(pso_h);
  out.pso_std = stddev_of(pso_h);
  return out;
}

SweepParam sweep_param_from_string(std::string_view name) {
  if (name == "n_uavs") return SweepParam::NUavs;
  if (name == "n_users") return SweepParam::NUsers;
  if (name == "comm_radius" || name == "comm_radius_gamma") return SweepParam::CommRadius;
  throw Error(ErrorKind::Config, "unknown sweep parameter '" + std::string(name) +
                                     "' (expected n_uavs, n_users or comm_radius)");
}

std::string_view to_string(SweepParam param) noexcept {
  switch (param) {
    case SweepParam::NUavs: return "n_uavs";
    case SweepParam::NUsers: return "n_users";
    case SweepParam::CommRadius: return "comm_radius";
  }
  return "unknown";
}

namespace {

SweepPoint run_point(const Config& base, SweepParam param, double value,
                     std::size_t index, std::size_t seeds) {
  Config c = base;
  switch (param) {
    case SweepParam::NUavs:
      c.scenario.n_uavs = static_cast<std::size_t>(std::llround(value));
      break;
    case SweepParam::NUsers:
      c.scenario.n_users = static_cast<std::size_t>(std::llround(value));
      c.scenario.users.reset();
      break;
    case SweepParam::CommRadius:
      c.scenario.comm_radius_gamma = value;
      break;
  }
  // Counts are summed as integers and divided once, so points with equal
  // totals report bit-identical means.
  std::size_t ncv2 = 0, ncv1 = 0, largest = 0, users = 0, uavs = 0;
  for (std::size_t r = 0; r < seeds; ++r) {
    Config rc = c;
    rc.scenario.seed = base.scenario.seed + r;
    const Scenario s = generate_scenario(rc).scenario;
    WoaParams woa = rc.woa;
    woa.threads = 1;
    woa.seed = derive_seed(base.scenario.seed, static_cast<std::uint32_t>(index),
                           static_cast<std::uint32_t>(r));
    const OptimizerResult res = run_optimizer(s, woa);
    ncv2 += res.report.ncv2;
    ncv1 += res.report.ncv1;
    largest += nc_largest(build_topology(res.best, s));
    users += s.user_count();
    uavs += s.n_uavs;
  }
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  return {value, ratio(ncv2, users), ratio(ncv1, users), ratio(largest, uavs), seeds};
}

}  // namespace

SweepResult run_sweep(const Config& config, SweepParam param, double from,
                      double to, double step, std::size_t seeds,
                      std::size_t threads) {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step) ||
      step <= 0.0 || to < from) {
    throw Error(ErrorKind::Config, "sweep range needs from <= to and step > 0");
  }
  if (seeds == 0) throw Error(ErrorKind::Config, "sweep needs at least one seed");
  std::vector<double> values;
  // small epsilon so that 90..200 step 10 includes 200
  for (std::size_t i = 0;; ++i) {
    const double v = from + static_cast<double>(i) * step;
    if (v > to + 1e-9 * std::max(1.0, std::abs(to))) break;
    values.push_back(v);
  }
  SweepResult out;
  out.param = param;
  out.points.resize(values.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, values.size()));
  {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < values.size(); i += workers) {
            out.points[i] = run_point(config, param, values[i], i, seeds);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return out;
}

}  // namespace uavfog
