#include "qdsfusion/confidence_curve.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qdsfusion/bessel.hpp"
#include "qdsfusion/error.hpp"

namespace qds {

std::string_view to_string(Superposition mode) noexcept {
  return mode == Superposition::Dirichlet ? "dirichlet" : "sum";
}

double order_alpha(double c, double gamma) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("scale factor c must be positive, got {}", c));
  }
  if (!std::isfinite(gamma)) {
    throw Error(ErrorKind::InvalidParameter, "quasi-potential strength must be finite");
  }
  const double c2 = c * c;
  if (gamma >= c2 / 4.0) {
    throw Error(ErrorKind::ComplexOrderRegime,
                fmt::format("gamma = {} >= c^2/4 = {} gives a complex Bessel order", gamma,
                            c2 / 4.0));
  }
  return 0.5 * std::sqrt((c2 - 4.0 * gamma) / c2);
}

CurveParams CurveParams::create(double c, double big_l, double gamma, double x_r,
                                Superposition mode) {
  const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(c)) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("c must be positive, got {}", c));
  }
  if (!positive(big_l)) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("L must be positive, got {}", big_l));
  }
  if (!(gamma >= 0.0)) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("gamma must be nonnegative, got {}", gamma));
  }
  if (!positive(x_r)) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("x_r must be positive, got {}", x_r));
  }
  CurveParams p;
  p.c_ = c;
  p.big_l_ = big_l;
  p.gamma_ = gamma;
  p.x_r_ = x_r;
  p.mode_ = mode;
  p.alpha_ = order_alpha(c, gamma);
  if (p.alpha_ < kMinBesselOrder) {
    throw Error(ErrorKind::OrderOutOfRange,
                fmt::format("order alpha = {} is below {}; gamma is too close to c^2/4",
                            p.alpha_, kMinBesselOrder));
  }
  return p;
}

double CurveParams::wavenumber() const noexcept { return std::sqrt(big_l_) / c_; }

WaveFunction::WaveFunction(const CurveParams& params) : params_(params) {
  if (params.mode() == Superposition::Dirichlet) {
    const double z_r = params.wavenumber() * params.x_r();
    const double y = bessel_y(params.alpha(), z_r);
    if (std::abs(y) < 1e-300) {
      throw Error(ErrorKind::DegenerateCurve,
                  "Y_alpha vanishes at the wall; the Dirichlet weight is undefined");
    }
    y_weight_ = -bessel_j(params.alpha(), z_r) / y;
  }
}

double WaveFunction::amplitude(double x) const {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::NonPositiveDistance,
                fmt::format("distance must be positive, got {}", x));
  }
  if (x > params_.x_r()) return 0.0;
  const double z = params_.wavenumber() * x;
  const double alpha = params_.alpha();
  return std::sqrt(x) * (bessel_j(alpha, z) + y_weight_ * bessel_y(alpha, z));
}

double WaveFunction::density(double x) const {
  const double a = amplitude(x);
  return a * a;
}

double psi(const CurveParams& params, double x) { return WaveFunction(params).amplitude(x); }

double prob_density(const CurveParams& params, double x) {
  return WaveFunction(params).density(x);
}

ConfidenceCurve confidence_curve(const CurveParams& params, std::size_t grid_size) {
  if (grid_size < kMinGridSize) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("grid size must be at least {}, got {}", kMinGridSize, grid_size));
  }
  const WaveFunction wave(params);
  ConfidenceCurve curve(params);
  curve.xs_.resize(grid_size);
  curve.densities_.resize(grid_size);
  const double x_r = params.x_r();
  for (std::size_t i = 0; i < grid_size; ++i) {
    // The last point is pinned to x_r exactly.
    const double x = i + 1 == grid_size
                         ? x_r
                         : x_r * static_cast<double>(i + 1) / static_cast<double>(grid_size);
    curve.xs_[i] = x;
    curve.densities_[i] = wave.density(x);
  }
  const auto peak = std::max_element(curve.densities_.begin(), curve.densities_.end());
  curve.argmax_ = static_cast<std::size_t>(peak - curve.densities_.begin());
  curve.norm_ = *peak;
  if (!(curve.norm_ > 1e-300)) {
    throw Error(ErrorKind::DegenerateCurve, "sampled probability density is numerically zero");
  }
  curve.mus_.resize(grid_size);
  std::transform(curve.densities_.begin(), curve.densities_.end(), curve.mus_.begin(),
                 [norm = curve.norm_](double p) { return p / norm; });
  curve.mus_[curve.argmax_] = 1.0;
  return curve;
}

double ConfidenceCurve::reliability_at(double x) const {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::NonPositiveDistance,
                fmt::format("distance must be positive, got {}", x));
  }
  if (x > params_.x_r()) return 0.0;
  if (x <= xs_.front()) return mus_.front();
  const auto upper = std::lower_bound(xs_.begin(), xs_.end(), x);
  const auto hi = static_cast<std::size_t>(upper - xs_.begin());
  if (xs_[hi] == x) return mus_[hi];
  const std::size_t lo = hi - 1;
  const double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  const double mu = mus_[lo] + t * (mus_[hi] - mus_[lo]);
  return std::clamp(mu, 0.0, 1.0);
}

}  // namespace qds
