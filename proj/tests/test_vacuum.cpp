#include "multipole/specfun.hpp"
#include "multipole/vacuum.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace multipole;
using namespace multipole::vacuum;
using std::numbers::pi;

namespace {

VacuumScanConfig config(int j_max, bool both = true) {
  VacuumScanConfig c;
  c.j_max = j_max;
  c.include_both_parities = both;
  c.kr_grid = linear_grid(0.01, 20.0, 2000);
  return c;
}

} // namespace

TEST_CASE("degree-of-freedom counts") {
  CHECK(dof_ratio(1) == Rational(3, 2));
  CHECK(dof_ratio(2) == Rational(4, 1));
  CHECK(dof_ratio(3) == Rational(15, 2));
  CHECK_THROWS_AS(dof_ratio(0), std::invalid_argument);
  CHECK(plane_wave_vacuum_count() / multipole_vacuum_count(1) == Rational(2, 3));
  CHECK(multipole_vacuum_count(1, true) == Rational(3, 1));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("plane-wave baseline is a constant of two half quanta") {
  CHECK(plane_wave_vacuum_density() == 1.0);
  CHECK(plane_wave_vacuum_density() == plane_wave_vacuum_density());
}

TEST_CASE("density limits") {
  const auto c1 = config(1);
  CHECK(vacuum_energy_density(c1, 1e-9) == doctest::Approx(2.0).epsilon(1e-12));
  const double peak = vacuum_energy_density(c1, 1e-6);
  CHECK(vacuum_energy_density(c1, 100.0) < 0.05 * peak);

  // Near the origin only the j_0 term of the electric dipole matters.
  const double kr = 1e-2;
  const double total = vacuum_energy_density(c1, kr);
  const double j0 = specfun::spherical_bessel_j(0, kr);
  CHECK(std::abs(total - 2.0 * j0 * j0) < 1e-3 * total);

  CHECK_THROWS_AS(vacuum_energy_density(c1, 0.0), std::domain_error);
  CHECK_THROWS_AS(vacuum_energy_density(c1, -1.0), std::domain_error);
}

TEST_CASE("explicit angular sum matches the radial closed form") {
  for (bool both : {true, false})
    for (int j_max : {1, 2, 4})
      for (double kr : {0.2, 1.3, 4.0, 11.0}) {
        auto c = config(j_max, both);
        const double ref = vacuum_energy_density(c, kr);
        for (int s = 0; s < 10; ++s) {
          const SpacePoint p(kr, oracle::uniform(0.0, pi), oracle::uniform(-pi, pi));
          CHECK(std::abs(vacuum_energy_density_at(c, p) - ref) <= 1e-9 * ref);
        }
      }
}

TEST_CASE("complete multipole set of both parities sums to twice the baseline") {
  auto c = config(60);
  for (double kr : {0.5, 3.0, 10.0, 25.0})
    CHECK(vacuum_energy_density(c, kr) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("monotone truncation") {
  for (bool both : {true, false})
    for (double kr : {0.05, 0.9, 2.5, 7.0, 19.0}) {
      double prev = 0.0;
      for (int j = 1; j <= 12; ++j) {
        const double d = vacuum_energy_density(config(j, both), kr);
        CHECK(d >= prev);
        prev = d;
      }
    }
}

TEST_CASE("concentration radius") {
  const auto c1 = config(1);
  const double r1 = concentration_radius(c1);
  CHECK(r1 >= 1.0);
  CHECK(r1 <= 4.0);
  CHECK(std::abs(vacuum_energy_density(c1, r1) - 1.0) < 1e-8);
  for (double kr : c1.kr_grid)
    if (kr < r1)
      CHECK(vacuum_energy_density(c1, kr) > plane_wave_vacuum_density());

  const double r3 = concentration_radius(config(3));
  CHECK(r3 >= r1);
  const double r3e = concentration_radius(config(3, false));
  const double r1e = concentration_radius(config(1, false));
  CHECK(r3e >= r1e);

  CHECK_THROWS_AS(concentration_radius(c1, 2.5), NoCrossingError);
  auto short_grid = c1;
  short_grid.kr_grid = linear_grid(0.01, 1.0, 10);
  CHECK_THROWS_AS(concentration_radius(short_grid), NoCrossingError);
}

TEST_CASE("scan config validation") {
  VacuumScanConfig c;
  c.kr_grid = {0.1, 0.2, 0.2};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.kr_grid = {0.0, 0.2};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.kr_grid = {0.1, 0.2};
  c.j_max = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.j_max = 1;
  c.k = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("sum-rule convergence diagnostic") {
  for (double z : {0.5, 1.0, 2.0, 5.0, 10.0})
    CHECK(sum_rule_residual(z, 40) < 1e-6);
  CHECK(sum_rule_residual(2.0, 2) > 1e-3);
  // The same partial sums written with j_ell: (2z/pi) sum j_ell^2.
  const double z = 3.0;
  double s = 0.0;
  for (int ell = 0; ell <= 40; ++ell)
    s += std::pow(oracle::bessel_series(ell, z), 2);
  CHECK(std::abs(2 * z / pi * s - specfun::bessel_square_sum(z, 40)) < 1e-13);
}

TEST_CASE("grids") {
  const auto g = linear_grid(1.0, 2.0, 5);
  CHECK(g.size() == 5);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 2.0);
  CHECK(g[2] == doctest::Approx(1.5));
  const auto lg = log_grid(0.01, 100.0, 5);
  CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lg.back() == 100.0);
  CHECK_THROWS_AS(linear_grid(1.0, 2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(linear_grid(2.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), std::invalid_argument);
}
