#pragma once

// Independent reference computations used to check the library.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "support.hpp"
#include "uavfog/model.hpp"

namespace testing {

// Warshall transitive closure over the raw link predicate.
inline std::vector<std::vector<bool>> reachability(const uavfog::PlacementVector& p,
                                                   double gamma,
                                                   const std::vector<bool>& alive = {}) {
  const std::size_t n = p.uav_count();
  auto up = [&](std::size_t i) { return alive.empty() || alive[i]; };
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = p.position(i), b = p.position(j);
      r[i][j] = up(i) && up(j) && (i == j || hypot2(a.x - b.x, a.y - b.y) <= gamma);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// Largest reachability class; ties go to the class holding the lowest index.
inline std::vector<std::size_t> largest_class(const std::vector<std::vector<bool>>& r) {
  std::vector<std::size_t> best;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r[i][i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[i][j]) cls.push_back(j);
    if (cls.size() > best.size()) best = cls;
  }
  return best;
}

struct CoverageCounts {
  std::size_t nc = 0, ncv1 = 0, ncv2 = 0;
  double h = 0.0;
};

// Direct per-user scan against every UAV; planar distance only.
inline CoverageCounts coverage_oracle(const uavfog::PlacementVector& p,
                                      const uavfog::Scenario& s) {
  const auto star = largest_class(reachability(p, s.comm_radius));
  CoverageCounts out;
  out.nc = star.size();
  for (const auto& u : s.users) {
    if (!u.active) continue;
    bool any = false, in_star = false;
    for (std::size_t i = 0; i < p.uav_count(); ++i) {
      const auto a = p.position(i);
      if (hypot2(a.x - u.pos.x, a.y - u.pos.y) <= s.comm_radius) {
        any = true;
        if (std::find(star.begin(), star.end(), i) != star.end()) in_star = true;
      }
    }
    out.ncv1 += any;
    out.ncv2 += in_star;
  }
  out.h = s.users.empty() ? 0.0 : static_cast<double>(out.ncv2) / s.users.size();
  return out;
}

}  // namespace testing
