#pragma once

// Special functions for wedge spontaneous-emission calculations:
// the two closed-form radiation kernels that appear in the image sums,
// their angular combinations, and cylindrical Bessel functions J_n.

#include <vector>

namespace wedgese::specfun {

// Radiation kernel for a dipole component parallel to the wedge axis:
//   g_parallel(x) = sin(x)/x + cos(x)/x^2 - sin(x)/x^3,   g_parallel(0) = 2/3.
// Smooth and bounded on [0, inf); |g_parallel| <= 2/3.
double g_parallel(double x);

// Companion kernel for transverse dipole components:
//   g_perp(x) = cos(x)/x^2 - sin(x)/x^3,   g_perp(0) = -1/3.
double g_perp(double x);

// Angular combinations entering the azimuthal and radial rates.  The
// argument convention is h(x, psi) with the kernels evaluated at x*sin(psi):
//   h_phi(x, psi) = g_parallel(x sin psi) sin^2 psi + 2 g_perp(x sin psi) cos^2 psi
//   h_rho(x, psi) = g_parallel(x sin psi) cos^2 psi + 2 g_perp(x sin psi) sin^2 psi
double h_phi(double x, double psi);
double h_rho(double x, double psi);

// Cylindrical Bessel function J_n(x) for integer n >= 0, x >= 0.
// Ascending series below x = 12, Miller's backward recurrence (normalized
// by J_0 + 2 J_2 + 2 J_4 + ... = 1) above.  For n far in the asymptotic
// tail (n > x + 40 and magnitude < 1e-300) the value underflows and
// exactly 0.0 is returned.
double bessel_j(int n, double x);

// dJ_n/dx via the recurrence J_n' = (J_{n-1} - J_{n+1})/2, J_0' = -J_1.
double bessel_j_prime(int n, double x);

// J_0(x) .. J_{n_max}(x) in one backward-recurrence pass.  Used by the
// mode sums, which need many orders at a common argument.
std::vector<double> bessel_j_array(int n_max, double x);

namespace detail {

// Both kernel branches, exposed so tests can pin down the series/closed-form
// switch-over.  The public functions select by kSeriesSwitch.
inline constexpr double kSeriesSwitch = 0.5;
double g_parallel_series(double x);
double g_parallel_closed(double x);
double g_perp_series(double x);
double g_perp_closed(double x);

}  // namespace detail

}  // namespace wedgese::specfun
