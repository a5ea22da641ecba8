#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qds {

// How the two Bessel solutions are superposed inside the well.
enum class Superposition {
  // J_alpha + Y_alpha, unweighted.
  Sum,
  // J_alpha + beta Y_alpha with beta chosen so psi(x_r) = 0.
  Dirichlet,
};

std::string_view to_string(Superposition mode) noexcept;

inline constexpr std::size_t kDefaultGridSize = 10'000;
inline constexpr std::size_t kMinGridSize = 100;

// alpha = 1/2 sqrt((c^2 - 4 gamma) / c^2). Throws ComplexOrderRegime when
// gamma >= c^2 / 4.
double order_alpha(double c, double gamma);

// Parameters of one radar's confidence curve.
class CurveParams {
 public:
  // Throws InvalidParameter, ComplexOrderRegime, or OrderOutOfRange.
  static CurveParams create(double c, double big_l, double gamma, double x_r,
                            Superposition mode = Superposition::Sum);

  double c() const noexcept { return c_; }
  double big_l() const noexcept { return big_l_; }
  double gamma() const noexcept { return gamma_; }
  double x_r() const noexcept { return x_r_; }
  Superposition mode() const noexcept { return mode_; }
  double alpha() const noexcept { return alpha_; }
  // z = wavenumber * x is the Bessel argument.
  double wavenumber() const noexcept;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;

 private:
  CurveParams() = default;

  double c_ = 0.0;
  double big_l_ = 0.0;
  double gamma_ = 0.0;
  double x_r_ = 0.0;
  Superposition mode_ = Superposition::Sum;
  double alpha_ = 0.0;
};

// Quasi-amplitude sqrt(x) [J_alpha(kx) + beta Y_alpha(kx)] inside (0, x_r],
// zero beyond. Holds the precomputed superposition weight beta.
class WaveFunction {
 public:
  // Throws DegenerateCurve if the Dirichlet weight is undefined.
  explicit WaveFunction(const CurveParams& params);

  const CurveParams& params() const noexcept { return params_; }
  double y_weight() const noexcept { return y_weight_; }

  // Throws NonPositiveDistance for x <= 0.
  double amplitude(double x) const;
  double density(double x) const;

 private:
  CurveParams params_;
  double y_weight_ = 1.0;
};

double psi(const CurveParams& params, double x);
double prob_density(const CurveParams& params, double x);

// Max-normalized density sampled on a uniform grid over (0, x_r].
class ConfidenceCurve {
 public:
  const CurveParams& params() const noexcept { return params_; }
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> densities() const noexcept { return densities_; }
  std::span<const double> mus() const noexcept { return mus_; }
  double x0() const noexcept { return xs_[argmax_]; }
  std::size_t argmax_index() const noexcept { return argmax_; }
  double norm() const noexcept { return norm_; }

  // Linear interpolation of mu; exactly 0 beyond x_r, held at the first
  // sample below the first grid point. Throws NonPositiveDistance.
  double reliability_at(double x) const;

 private:
  friend ConfidenceCurve confidence_curve(const CurveParams&, std::size_t);

  explicit ConfidenceCurve(const CurveParams& params) : params_(params) {}

  CurveParams params_;
  std::vector<double> xs_;
  std::vector<double> densities_;
  std::vector<double> mus_;
  std::size_t argmax_ = 0;
  double norm_ = 0.0;
};

// Throws InvalidArgument for grid_size < 100 and DegenerateCurve when the
// sampled density is numerically zero.
ConfidenceCurve confidence_curve(const CurveParams& params,
                                 std::size_t grid_size = kDefaultGridSize);

inline double reliability_at(const ConfidenceCurve& curve, double x) {
  return curve.reliability_at(x);
}

}  // namespace qds
