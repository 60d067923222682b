#include "uavfog/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "uavfog/experiments.hpp"
#include "uavfog/topology.hpp"

namespace uavfog {

using nlohmann::ordered_json;

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace) {
  out << "iter,best_h,nc,ncv1,ncv2,a_value,encircle,explore,spiral\n";
  for (const auto& t : trace) {
    out << t.iter << ',' << format_double(t.best_h) << ',' << t.nc << ','
        << t.ncv1 << ',' << t.ncv2 << ',' << format_double(t.a_value) << ','
        << t.mechanisms.encircle << ',' << t.mechanisms.explore << ','
        << t.mechanisms.spiral << '\n';
  }
}

void write_frames_csv(std::ostream& out, const std::vector<FrameRecord>& frames) {
  out << "frame,h,connectivity_ratio,alive,total_residual_j,nls_gstar_j,deaths,swaps\n";
  for (const auto& f : frames) {
    out << f.frame << ',' << format_double(f.h) << ','
        << format_double(f.connectivity_ratio) << ',' << f.alive << ','
        << format_double(f.total_residual_j) << ',' << format_double(f.nls_gstar_j)
        << ',' << f.deaths << ',' << f.swaps << '\n';
  }
}

namespace {

ordered_json points_json(const PlacementVector& placement) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < placement.uav_count(); ++i) {
    const Point p = placement.position(i);
    arr.push_back({{"id", i}, {"x", p.x}, {"y", p.y}});
  }
  return arr;
}

ordered_json breakdown_json(const EnergyBreakdown& b) {
  return {{"hover_j", b.hover_j}, {"travel_j", b.travel_j},
          {"comm_j", b.comm_j}, {"total_j", b.total()}};
}

// json.hpp refuses non-finite numbers; write them as null.
ordered_json number(double v) {
  return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

}  // namespace

std::string placement_json(const PlacementVector& placement,
                           const Scenario& scenario,
                           const FitnessReport& report,
                           const std::string& algorithm) {
  const Topology topo = build_topology(placement, scenario);
  ordered_json doc;
  doc["algorithm"] = algorithm;
  doc["h"] = report.h_value;
  doc["nc"] = report.nc;
  doc["ncv1"] = report.ncv1;
  doc["ncv2"] = report.ncv2;
  doc["m_active"] = report.m_active;
  doc["m_total"] = report.m_total;
  doc["connectivity_ratio"] = connectivity_ratio(topo);
  doc["largest_component"] = topo.largest_component;
  doc["uavs"] = points_json(placement);
  return doc.dump(2) + "\n";
}

std::string summary_json(const SimResult& r, const SimConfig& config) {
  ordered_json doc;
  doc["frames"] = r.frames.empty() ? 0 : r.frames.size() - 1;
  doc["frame_duration_s"] = config.frame_duration;
  doc["ecnsa_enabled"] = config.ecnsa_enabled;
  doc["coverage_floor"] = config.coverage_floor;
  doc["h_initial"] = r.h_initial;
  doc["h_final"] = r.frames.empty() ? 0.0 : r.frames.back().h;
  doc["lifespan_frames"] = r.lifespan_frames;
  doc["lifespan_s"] = static_cast<double>(r.lifespan_frames) * config.frame_duration;
  doc["initial_fleet_energy_j"] = r.initial_fleet_energy;
  doc["final_residual_j"] = r.final_residual;
  doc["consumed"] = breakdown_json(r.consumed);

  ordered_json per_frame = ordered_json::array();
  for (const auto& f : r.frames) {
    per_frame.push_back({{"frame", f.frame},
                         {"reoptimized", f.reoptimized},
                         {"consumed", breakdown_json(f.consumed)}});
  }
  doc["frame_energy"] = std::move(per_frame);

  ordered_json events = ordered_json::array();
  for (const auto& e : r.events) {
    ordered_json ev{{"frame", e.frame}, {"kind", std::string(to_string(e.kind))}};
    if (e.uav_a != kNoUav) ev["uav_a"] = e.uav_a;
    if (e.uav_b != kNoUav) ev["uav_b"] = e.uav_b;
    events.push_back(std::move(ev));
  }
  doc["events"] = std::move(events);

  ordered_json swaps = ordered_json::array();
  for (const auto& s : r.swaps) {
    swaps.push_back({{"frame", s.frame},
                     {"uav_a", s.pair.uav_a},
                     {"uav_b", s.pair.uav_b},
                     {"users_a", s.rationale.users_a},
                     {"users_b", s.rationale.users_b},
                     {"energy_a_j", number(s.rationale.energy_a)},
                     {"energy_b_j", number(s.rationale.energy_b)},
                     {"distance_m", number(s.rationale.distance)},
                     {"travel_j", number(s.rationale.travel_j)}});
  }
  doc["swaps"] = std::move(swaps);
  doc["initial_placement"] = points_json(r.initial_placement);
  doc["final_placement"] = points_json(r.final_placement);
  return doc.dump(2) + "\n";
}

void write_compare_csv(std::ostream& out, const CompareResult& result) {
  out << "seed,woa_h,pso_h,woa_connectivity,pso_connectivity\n";
  for (const auto& p : result.pairs) {
    out << p.scenario_seed << ',' << format_double(p.woa_h) << ','
        << format_double(p.pso_h) << ',' << format_double(p.woa_connectivity)
        << ',' << format_double(p.pso_connectivity) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << to_string(result.param) << ",mean_h,mean_coverage,mean_connectivity,seeds\n";
  for (const auto& p : result.points) {
    out << format_double(p.value) << ',' << format_double(p.mean_h) << ','
        << format_double(p.mean_coverage) << ','
        << format_double(p.mean_connectivity) << ',' << p.seeds << '\n';
  }
}

std::string error_json(ErrorKind kind, const std::string& message) {
  ordered_json doc;
  doc["error"] = {{"kind", std::string(to_string(kind))}, {"message", message}};
  return doc.dump() + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path + "'");
}

}  // namespace uavfog
