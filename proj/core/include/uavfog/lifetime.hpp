#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "uavfog/ecnsa.hpp"
#include "uavfog/energy.hpp"
#include "uavfog/model.hpp"
#include "uavfog/optimizer.hpp"

namespace uavfog {

struct SimConfig {
  std::size_t n_frames = 8;
  double frame_duration = 1800.0;   // s; overrides the energy model's frame
  double user_toggle_prob = 0.02;   // per user per frame
  double user_jitter_sigma = 5.0;   // m
  bool ecnsa_enabled = false;
  double reopt_trigger = 0.0;       // re-run WOA when h < trigger * h_initial
  double coverage_floor = 0.8;      // lifespan threshold on h / h_initial
  SwapThresholds swap;

  void validate() const;
  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// One row per frame. Row 0 is the deployed state before any time passes.
// For frames >= 1, h and connectivity describe the service topology at the
// start of the frame (after user churn); alive, residual and NLS describe
// the end of the frame after energy charges, deaths and swaps.
struct FrameRecord {
  std::size_t frame = 0;
  double h = 0.0;
  double connectivity_ratio = 0.0;
  std::size_t alive = 0;
  double total_residual_j = 0.0;
  double nls_gstar_j = 0.0;
  std::size_t deaths = 0;
  std::size_t swaps = 0;
  bool reoptimized = false;
  EnergyBreakdown consumed;  // fleet total drawn during this frame
};

enum class SimEventKind { Death, Swap, SwapDropped, Reoptimization, ReoptSkipped };
std::string_view to_string(SimEventKind kind) noexcept;

struct SimEvent {
  std::size_t frame = 0;
  SimEventKind kind = SimEventKind::Death;
  std::size_t uav_a = kNoUav;
  std::size_t uav_b = kNoUav;
};

// Audit row for one applied swap.
struct SwapAudit {
  std::size_t frame = 0;
  SwapPair pair;
  SwapRationale rationale;
};

struct SimResult {
  std::vector<FrameRecord> frames;
  std::vector<SimEvent> events;
  std::vector<SwapAudit> swaps;
  double h_initial = 0.0;
  std::size_t lifespan_frames = 0;
  double initial_fleet_energy = 0.0;
  double final_residual = 0.0;
  EnergyBreakdown consumed;  // whole run
  PlacementVector initial_placement;
  PlacementVector final_placement;
};

struct SimState {
  Scenario scenario;  // current user positions and activity
  PlacementVector placement;
  EnergyLedger ledger;
  std::vector<double> pending_travel;  // metres to fly during the next frame
  std::size_t frame = 0;               // last completed frame
  SimResult result;
};

// Builds the frame-0 state for an already optimized placement.
SimState make_sim_state(const Scenario& scenario, const SimConfig& config,
                        const PlacementVector& placement);

// Advances one frame: user churn, topology, energy charges, deaths,
// optional ECNSA swaps, optional warm-started re-optimization, record.
void step_timeframe(SimState& state, const SimConfig& config,
                    const WoaParams& woa);

// Initial WOA optimization followed by n_frames steps.
SimResult run_simulation(const Scenario& scenario, const SimConfig& config,
                         const WoaParams& woa);

// First frame f >= 1 with h_f < floor * h_0; frames.size() - 1 if none.
std::size_t lifespan_metric(const SimResult& result, double coverage_floor);

}  // namespace uavfog
