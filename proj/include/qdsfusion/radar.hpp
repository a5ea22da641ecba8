#pragma once

namespace qds {

// Radar range equation inputs, SI units.
struct RadarParams {
  double p_t = 0.0;     // object transmit power [W]
  double g_t = 0.0;     // object antenna gain
  double g_r = 0.0;     // radar antenna gain
  double sigma = 0.0;   // radar cross-section [m^2]
  double lambda = 0.0;  // wavelength [m]
  double p_rmin = 0.0;  // radar sensitivity [W]

  // Throws InvalidParameter unless every field is positive and finite.
  void validate() const;
};

// P_t G_t G_r sigma lambda^2 / (4 pi)^2, the numerator shared by the power,
// range, and quasi-potential strength formulas.
double radar_power_constant(const RadarParams& radar);

double received_power(const RadarParams& radar, double distance);

// Distance at which the received power drops to p_rmin.
double max_range(const RadarParams& radar);

// gamma = kappa * P_t G_t G_r sigma lambda^2 / (4 pi)^2 for a user-chosen
// proportionality constant kappa >= 0.
double quasi_potential_strength(const RadarParams& radar, double kappa);

}  // namespace qds
