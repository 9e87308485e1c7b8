#include "multipole/vacuum.hpp"

#include "multipole/specfun.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace multipole::vacuum {

namespace {

// Neumaier compensated accumulator.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double sq(double x) { return x * x; }

} // namespace

void VacuumScanConfig::validate() const {
  if (!(k > 0.0))
    throw std::invalid_argument("vacuum scan: k must be positive");
  if (j_max < 1)
    throw std::invalid_argument("vacuum scan: j_max must be >= 1");
  for (std::size_t i = 0; i < kr_grid.size(); ++i) {
    if (!(kr_grid[i] > 0.0))
      throw std::invalid_argument("vacuum scan: grid points must be positive");
    if (i > 0 && !(kr_grid[i] > kr_grid[i - 1]))
      throw std::invalid_argument(
          "vacuum scan: grid must be strictly increasing");
  }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0)
    throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

Rational operator/(const Rational &a, const Rational &b) {
  return {a.num * b.den, a.den * b.num};
}

double vacuum_energy_density(const VacuumScanConfig &cfg, double kr) {
  if (!(kr > 0.0))
    throw std::domain_error("vacuum_energy_density: kr must be positive");
  if (cfg.j_max < 1)
    throw std::invalid_argument("vacuum_energy_density: j_max must be >= 1");

  // f_0 .. f_{j_max+1}
  std::vector<double> f(cfg.j_max + 2);
  for (int ell = 0; ell <= cfg.j_max + 1; ++ell)
    f[ell] = specfun::spherical_bessel_j(ell, kr);

  CompensatedSum sum;
  for (int j = 1; j <= cfg.j_max; ++j) {
    sum.add(j * sq(f[j + 1]));
    sum.add((j + 1) * sq(f[j - 1]));
    if (cfg.include_both_parities)
      sum.add((2 * j + 1) * sq(f[j]));
  }
  return sum.value();
}

double vacuum_energy_density_at(const VacuumScanConfig &cfg,
                                const SpacePoint &p) {
  if (!(p.kr > 0.0))
    throw std::domain_error("vacuum_energy_density_at: kr must be positive");
  // k |V|^2 strips the normalisation volume; 4 pi puts it in plane-wave units.
  CompensatedSum sum;
  for (int j = 1; j <= cfg.j_max; ++j) {
    for (int m = -j; m <= j; ++m) {
      const ModeIndex electric(ModeType::Electric, cfg.k, j, m);
      const ModeIndex magnetic(ModeType::Magnetic, cfg.k, j, m);
      for (int mu = 1; mu >= -1; --mu) {
        sum.add(cfg.k * std::norm(mode_function(electric, mu, p,
                                                RadialKind::CavityStanding)));
        if (cfg.include_both_parities)
          sum.add(cfg.k * std::norm(mode_function(magnetic, mu, p,
                                                  RadialKind::CavityStanding)));
      }
    }
  }
  return 4.0 * std::numbers::pi * sum.value();
}

double plane_wave_vacuum_density() { return 2 * 0.5; }

Rational plane_wave_vacuum_count() { return {2, 2}; }

Rational multipole_vacuum_count(int j_max, bool include_both_parities) {
  if (j_max < 1)
    throw std::invalid_argument("multipole_vacuum_count: j_max must be >= 1");
  std::int64_t modes = 0;
  for (int j = 1; j <= j_max; ++j)
    modes += 2 * j + 1;
  if (include_both_parities)
    modes *= 2;
  return {modes, 2};
}

Rational dof_ratio(int j_max) {
  return multipole_vacuum_count(j_max) / plane_wave_vacuum_count();
}

double concentration_radius(const VacuumScanConfig &cfg, double baseline,
                            double tol) {
  cfg.validate();
  const auto &grid = cfg.kr_grid;
  if (grid.size() < 2)
    throw std::invalid_argument("concentration_radius: need at least two grid "
                                "points");
  auto excess = [&](double kr) {
    return vacuum_energy_density(cfg, kr) - baseline;
  };

  if (!(excess(grid.front()) > 0.0))
    throw NoCrossingError("concentration_radius: density starts at or below "
                          "the baseline");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = excess(grid[i]);
    if (cur < 0.0) {
      double lo = grid[i - 1];
      double hi = grid[i];
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) >= 0.0)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  throw NoCrossingError("concentration_radius: density stays above the "
                        "baseline up to kr = " +
                        std::to_string(grid.back()));
}

double concentration_radius(const VacuumScanConfig &cfg) {
  return concentration_radius(cfg, plane_wave_vacuum_density());
}

double sum_rule_residual(double z, int max_order) {
  return std::abs(specfun::bessel_square_sum(z, max_order) -
                  specfun::sine_integral(2.0 * z) / std::numbers::pi);
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 2)
    throw std::invalid_argument("grid needs at least 2 steps");
  if (!(hi > lo))
    throw std::invalid_argument("grid upper bound must exceed lower bound");
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i)
    g[i] = lo + (hi - lo) * double(i) / double(steps - 1);
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, int steps) {
  if (!(lo > 0.0))
    throw std::invalid_argument("log grid needs a positive lower bound");
  auto g = linear_grid(std::log(lo), std::log(hi), steps);
  for (auto &x : g)
    x = std::exp(x);
  g.front() = lo;
  g.back() = hi;
  return g;
}

} // namespace multipole::vacuum
