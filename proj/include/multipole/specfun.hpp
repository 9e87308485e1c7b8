#pragma once

#include <complex>

namespace multipole::specfun {

// Largest positive order accepted by spherical_bessel_j. Negative orders are
// limited only by overflow of the result.
inline constexpr int kMaxBesselOrder = 400;

/// Spherical Bessel function j_ell(x) = sqrt(pi/2x) J_{ell+1/2}(x) for any
/// integer order. Negative orders follow j_{-n-1} = (-1)^{n+1} y_n.
///
/// Positive orders use upward recurrence when x > ell and a backward
/// continued fraction for j_ell/j_{ell-1} otherwise, normalised by whichever
/// of j_0, j_1 is larger. Negative orders recur downward from
/// j_0 = sin x / x and j_{-1} = cos x / x, which is the stable direction.
///
/// Throws std::domain_error for x < 0, for x == 0 with ell < 0, and for
/// ell > kMaxBesselOrder; std::overflow_error if a negative-order value is not
/// representable.
double spherical_bessel_j(int ell, double x);

/// h^(1)_ell(x) = j_ell(x) + i (-1)^{ell+1} j_{-ell-1}(x), ell >= 0, x > 0.
std::complex<double> spherical_hankel1(int ell, double x);

/// Si(z) = integral_0^z sin(t)/t dt for z >= 0.
double sine_integral(double z);

/// Partial sum sum_{ell=0}^{max_order} J^2_{ell+1/2}(z). Tends to Si(2z)/pi.
double bessel_square_sum(double z, int max_order);

/// Condon-Shortley spherical harmonic Y_ell^m(theta, phi).
/// Throws std::invalid_argument if |m| > ell or ell < 0 and
/// std::domain_error if theta lies outside [0, pi].
std::complex<double> spherical_harmonic(int ell, int m, double theta,
                                        double phi);

// Angular momentum arguments stored as doubled integers so half-integers and
// the triangle rule stay exact.
struct CGArgs {
  int two_j1 = 0;
  int two_m1 = 0;
  int two_j2 = 0;
  int two_m2 = 0;
  int two_j = 0;
  int two_m = 0;

  static constexpr CGArgs integral(int j1, int m1, int j2, int m2, int j,
                                   int m) {
    return {2 * j1, 2 * m1, 2 * j2, 2 * m2, 2 * j, 2 * m};
  }
};

/// <j1 m1; j2 m2 | j m> in the Condon-Shortley convention (Racah's closed
/// form, evaluated with log-factorials). Returns 0 for any selection-rule or
/// range failure. Negative j values throw std::invalid_argument.
double clebsch_gordan(const CGArgs &args);

inline double clebsch_gordan(int j1, int m1, int j2, int m2, int j, int m) {
  return clebsch_gordan(CGArgs::integral(j1, m1, j2, m2, j, m));
}

} // namespace multipole::specfun
