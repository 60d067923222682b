#pragma once

namespace uavfog {

// Power, radio and traffic constants for the UAV energy model. None of the
// defaults are measured values; they are plausible small-multirotor
// magnitudes and every field can be overridden from the config document.
struct EnergyParams {
  double p_hover = 150.0;             // W
  double p_travel = 200.0;            // W
  double cruise_speed = 10.0;         // m/s
  double p_transmit_uav = 0.1;        // W, P_e
  double p_receive_uav = 0.1;         // W, P_r
  double p_transmit_user = 0.1;       // W, P_u
  double p_transmit_uav_dl = 0.1;     // W, P_f
  double bandwidth = 1.0e6;           // Hz
  double beta0 = 1.0e-4;              // channel gain at 1 m
  double noise_sigma2 = 1.0e-13;      // W
  double input_data_bits = 1.0e6;     // per user per frame
  double output_data_bits = 0.5e6;    // per user per frame
  double frame_duration = 1800.0;     // s

  // Throws Error{Config} unless every field is finite and strictly positive.
  void validate() const;

  friend bool operator==(const EnergyParams&, const EnergyParams&) = default;
};

}  // namespace uavfog
