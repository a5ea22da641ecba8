#include "qdsfusion/bessel.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <quadmath.h>

#include "qdsfusion/error.hpp"

namespace qds {
namespace detail {

constexpr long double kPi = std::numbers::pi_v<long double>;

namespace {

using Quad = __float128;

long double power(long double base, long double e) { return std::pow(base, e); }
long double gamma_fn(long double x) { return std::tgamma(x); }
Quad power(Quad base, Quad e) { return powq(base, e); }
Quad gamma_fn(Quad x) { return tgammaq(x); }

template <typename Real>
Real abs_value(Real x) {
  return x < 0 ? -x : x;
}

template <typename Real>
Real series(Real nu, Real z) {
  const Real half = z / 2;
  const Real quarter_sq = half * half;
  Real term = power(half, nu) / gamma_fn(nu + 1);
  Real sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= -quarter_sq / (Real(k) * (Real(k) + nu));
    sum += term;
    if (abs_value(term) < Real(1e-15) * abs_value(sum) || term == 0) break;
  }
  return sum;
}

// Beyond this argument the alternating terms grow past ~e^z / z and
// extended precision no longer leaves enough digits; sum in quad precision.
constexpr long double kQuadSeriesFrom = 4.0L;

}  // namespace

long double bessel_j_series(long double nu, long double z) {
  if (z > kQuadSeriesFrom) return static_cast<long double>(series<Quad>(nu, z));
  return series<long double>(nu, z);
}

long double bessel_y_series(long double nu, long double z) {
  if (z > kQuadSeriesFrom) {
    const Quad q_nu = nu;
    const Quad q_z = z;
    const Quad angle = q_nu * acosq(Quad(-1));
    return static_cast<long double>(
        (series<Quad>(q_nu, q_z) * cosq(angle) - series<Quad>(-q_nu, q_z)) / sinq(angle));
  }
  const long double angle = nu * kPi;
  return (series<long double>(nu, z) * std::cos(angle) - series<long double>(-nu, z)) /
         std::sin(angle);
}

HankelPair bessel_hankel(long double nu, long double z) {
  const long double mu = 4.0L * nu * nu;
  long double p = 1.0L;
  long double q = 0.0L;
  long double a = 1.0L;
  long double previous = 1.0L;
  for (int k = 1; k < 200; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    const long double next = a * (mu - odd * odd) / (static_cast<long double>(k) * 8.0L * z);
    if (next == 0.0L) break;
    // Asymptotic series: stop at the smallest term.
    if (std::fabs(next) > std::fabs(previous)) break;
    a = next;
    previous = next;
    // k = 1, 2, 3, 4, ... contributes +Q, -P, -Q, +P, ...
    switch (k % 4) {
      case 1: q += a; break;
      case 2: p -= a; break;
      case 3: q -= a; break;
      case 0: p += a; break;
    }
    if (std::fabs(a) < 1e-21L) break;
  }
  const long double omega = z - (nu / 2.0L + 0.25L) * kPi;
  const long double scale = std::sqrt(2.0L / (kPi * z));
  const long double c = std::cos(omega);
  const long double s = std::sin(omega);
  return {scale * (p * c - q * s), scale * (p * s + q * c)};
}

long double bessel_j_any(long double nu, long double z) {
  if (z > kAsymptoticSwitch) return bessel_hankel(nu, z).j;
  return bessel_j_series(nu, z);
}

}  // namespace detail

namespace {

void check_argument(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw Error(ErrorKind::NonPositiveArgument,
                fmt::format("Bessel argument must be positive and finite, got {}", z));
  }
}

}  // namespace

double bessel_j(double alpha, double z) {
  if (!(alpha > 0.0 && alpha <= kMaxBesselOrder)) {
    throw Error(ErrorKind::OrderOutOfRange,
                fmt::format("Bessel order {} outside (0, 0.5]", alpha));
  }
  check_argument(z);
  return static_cast<double>(detail::bessel_j_any(alpha, z));
}

double bessel_y(double alpha, double z) {
  if (!(alpha >= kMinBesselOrder && alpha <= kMaxBesselOrder)) {
    throw Error(ErrorKind::OrderOutOfRange,
                fmt::format("Bessel order {} outside [1e-6, 0.5]", alpha));
  }
  check_argument(z);
  if (z > kAsymptoticSwitch) return static_cast<double>(detail::bessel_hankel(alpha, z).y);
  return static_cast<double>(detail::bessel_y_series(alpha, z));
}

}  // namespace qds
