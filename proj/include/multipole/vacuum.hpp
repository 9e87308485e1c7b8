#pragma once

#include "multipole/field.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace multipole::vacuum {

// Zero-point energy densities are reported in units where the plane-wave
// level is one: the multipole sum over (j, m, mu) is taken with harmonics
// normalised over the full solid angle (4 pi |Y|^2), and the plane-wave
// vacuum contributes 2 polarizations x 1/2 quantum. In these units a
// complete set of multipoles of both parities adds up to 2 at every point
// and a single multipole mode has a far-field envelope of 1/(2 (kr)^2).

struct VacuumScanConfig {
  double k = 1.0;
  int j_max = 1;
  std::vector<double> kr_grid;
  bool include_both_parities = true;

  // Throws std::invalid_argument unless k > 0, j_max >= 1 and the grid is
  // strictly increasing and positive.
  void validate() const;
};

/// Exact non-negative rational.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const { return double(num) / double(den); }
  friend bool operator==(const Rational &, const Rational &) = default;
};

Rational operator/(const Rational &a, const Rational &b);

class NoCrossingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Multipole zero-point energy density at radius kr (angle independent).
/// Sums ascending j with compensated summation:
///   electric: j f_{j+1}^2 + (j+1) f_{j-1}^2,  magnetic: (2j+1) f_j^2.
double vacuum_energy_density(const VacuumScanConfig &cfg, double kr);

/// The same quantity from an explicit sum over (j, m, mu) of |V|^2 at the
/// given direction, ascending j, then m, then mu.
double vacuum_energy_density_at(const VacuumScanConfig &cfg,
                                const SpacePoint &p);

/// Plane-wave zero-point density, uniform in space.
double plane_wave_vacuum_density();

/// Whole-volume zero-point energy of one k in units of hbar*omega.
Rational plane_wave_vacuum_count();
Rational multipole_vacuum_count(int j_max, bool include_both_parities = false);

/// sum_{j=1}^{j_max} (2j+1) / 2 : electric multipole vs plane-wave degrees of
/// freedom. Throws std::invalid_argument for j_max < 1.
Rational dof_ratio(int j_max);

/// First kr on the grid at which the density falls below `baseline`, refined
/// by bisection to `tol`. Throws NoCrossingError if the density never
/// crosses from above.
double concentration_radius(const VacuumScanConfig &cfg, double baseline,
                            double tol = 1e-10);
double concentration_radius(const VacuumScanConfig &cfg);

/// |sum_{l=0}^{max_order} J^2_{l+1/2}(z) - Si(2z)/pi|: convergence of the
/// radial-function sum feeding the density toward its closed-form limit.
double sum_rule_residual(double z, int max_order);

/// Linear grid of `steps` points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int steps);
/// Geometric grid of `steps` points on [lo, hi], lo > 0.
std::vector<double> log_grid(double lo, double hi, int steps);

} // namespace multipole::vacuum
