#include "qdsfusion/radar.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qdsfusion/error.hpp"

namespace qds {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("radar parameter {} must be positive, got {}", name, value));
  }
}

}  // namespace

void RadarParams::validate() const {
  require_positive(p_t, "p_t");
  require_positive(g_t, "g_t");
  require_positive(g_r, "g_r");
  require_positive(sigma, "sigma");
  require_positive(lambda, "lambda");
  require_positive(p_rmin, "p_rmin");
}

double radar_power_constant(const RadarParams& radar) {
  radar.validate();
  const double four_pi = 4.0 * std::numbers::pi;
  return radar.p_t * radar.g_t * radar.g_r * radar.sigma * radar.lambda * radar.lambda /
         (four_pi * four_pi);
}

double received_power(const RadarParams& radar, double distance) {
  if (!(distance > 0.0)) {
    throw Error(ErrorKind::NonPositiveDistance,
                fmt::format("distance must be positive, got {}", distance));
  }
  return radar_power_constant(radar) / (distance * distance);
}

double max_range(const RadarParams& radar) {
  return std::sqrt(radar_power_constant(radar) / radar.p_rmin);
}

double quasi_potential_strength(const RadarParams& radar, double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("proportionality constant must be nonnegative, got {}", kappa));
  }
  return kappa * radar_power_constant(radar);
}

}  // namespace qds
