#pragma once

// Bessel functions of the first and second kind for real order in (0, 1/2],
// the range produced by the quasi-potential order formula.

namespace qds {

inline constexpr double kMinBesselOrder = 1e-6;
inline constexpr double kMaxBesselOrder = 0.5;
// Arguments above this use the large-argument (Hankel) expansion.
inline constexpr double kAsymptoticSwitch = 20.0;

// J_alpha(z), 0 < alpha <= 1/2, z > 0.
double bessel_j(double alpha, double z);

// Y_alpha(z), 1e-6 <= alpha <= 1/2, z > 0.
double bessel_y(double alpha, double z);

namespace detail {

// Ascending power series for J_nu(z). Valid for any real nu with
// nu + 1 not a nonpositive integer; loses accuracy for large z.
long double bessel_j_series(long double nu, long double z);

// (J_nu cos(nu pi) - J_-nu) / sin(nu pi) from the series, 0 < nu < 1.
long double bessel_y_series(long double nu, long double z);

struct HankelPair {
  long double j;
  long double y;
};

// Large-argument expansion summed to its smallest term.
HankelPair bessel_hankel(long double nu, long double z);

// Unchecked J_nu for non-integer nu > -1, branch chosen by argument.
long double bessel_j_any(long double nu, long double z);

}  // namespace detail
}  // namespace qds
