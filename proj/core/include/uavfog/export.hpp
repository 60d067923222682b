#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "uavfog/error.hpp"
#include "uavfog/lifetime.hpp"
#include "uavfog/model.hpp"
#include "uavfog/objective.hpp"
#include "uavfog/optimizer.hpp"

namespace uavfog {

struct CompareResult;
struct SweepResult;

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// iter,best_h,nc,ncv1,ncv2,a_value,encircle,explore,spiral
void write_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace);

// frame,h,connectivity_ratio,alive,total_residual_j,nls_gstar_j,deaths,swaps
void write_frames_csv(std::ostream& out, const std::vector<FrameRecord>& frames);

std::string placement_json(const PlacementVector& placement,
                           const Scenario& scenario,
                           const FitnessReport& report,
                           const std::string& algorithm);

std::string summary_json(const SimResult& result, const SimConfig& config);

void write_compare_csv(std::ostream& out, const CompareResult& result);
void write_sweep_csv(std::ostream& out, const SweepResult& result);

std::string error_json(ErrorKind kind, const std::string& message);

// Writes `text` to `path`, throwing Error{Io} on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace uavfog
