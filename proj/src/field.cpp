#include "multipole/field.hpp"

#include "multipole/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace multipole {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// V_{E}: sqrt(j) f_{j+1} <1,j+1,mu,m-mu|jm> Y_{j+1,m-mu}
//      - sqrt(j+1) f_{j-1} <1,j-1,mu,m-mu|jm> Y_{j-1,m-mu}
// V_{M}: f_j <1,j,mu,m-mu|jm> Y_{j,m-mu}
cplx angular_term(int ell, int j, int m, int mu, const SpacePoint &p) {
  const int q = m - mu;
  if (ell < 0 || std::abs(q) > ell)
    return 0.0;
  const double cg = specfun::clebsch_gordan(1, mu, ell, q, j, m);
  if (cg == 0.0)
    return 0.0;
  return cg * specfun::spherical_harmonic(ell, q, p.theta, p.phi);
}

void check_mu(int mu) {
  if (mu < -1 || mu > 1)
    throw std::invalid_argument("helicity index must be -1, 0 or +1");
}

} // namespace

double HelicityVector::squared_norm() const {
  return std::norm(c_[0]) + std::norm(c_[1]) + std::norm(c_[2]);
}

Vec3c helicity_unit(int mu) {
  check_mu(mu);
  const cplx i(0.0, 1.0);
  switch (mu) {
  case 1:
    return Vec3c(-kInvSqrt2, -i * kInvSqrt2, 0.0);
  case -1:
    return Vec3c(kInvSqrt2, -i * kInvSqrt2, 0.0);
  default:
    return Vec3c(0.0, 0.0, 1.0);
  }
}

Vec3c HelicityVector::to_cartesian() const {
  Vec3c v = Vec3c::Zero();
  for (int mu = 1; mu >= -1; --mu)
    v += (*this)[mu] * helicity_unit(mu);
  return v;
}

HelicityVector helicity_from_cartesian(const Vec3c &v) {
  // a_mu = conj(chi_mu) . v
  const cplx i(0.0, 1.0);
  return {-(v.x() - i * v.y()) * kInvSqrt2, v.z(),
          (v.x() + i * v.y()) * kInvSqrt2};
}

cplx helicity_dot(const HelicityVector &a, const HelicityVector &b) {
  return -a[1] * b[-1] + a[0] * b[0] - a[-1] * b[1];
}

ModeIndex::ModeIndex(ModeType type_, double k_, int j_, int m_)
    : type(type_), k(k_), j(j_), m(m_) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw std::invalid_argument("ModeIndex: wavenumber must be positive");
  if (j < 1)
    throw std::invalid_argument("ModeIndex: angular momentum j must be >= 1");
  if (std::abs(m) > j)
    throw std::invalid_argument("ModeIndex: |m| must not exceed j");
}

SpacePoint::SpacePoint(double kr_, double theta_, double phi_)
    : kr(kr_), theta(theta_), phi(phi_) {
  if (!(kr >= 0.0) || !std::isfinite(kr))
    throw std::invalid_argument("SpacePoint: kr must be finite and >= 0");
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::invalid_argument("SpacePoint: theta outside [0, pi]");
}

cplx radial_function(RadialKind kind, int ell, double kr, double cutoff) {
  if (kind == RadialKind::CavityStanding)
    return specfun::spherical_bessel_j(ell, kr);
  if (!(kr >= cutoff) || kr <= 0.0)
    throw std::domain_error("outgoing wave evaluated at kr = " +
                            std::to_string(kr) + " inside the atom cutoff " +
                            std::to_string(cutoff));
  return specfun::spherical_hankel1(ell, kr);
}

cplx mode_function(const ModeIndex &mode, int mu, const SpacePoint &p,
                   RadialKind radial, double cutoff) {
  check_mu(mu);
  const int j = mode.j;
  const int m = mode.m;
  if (mode.type == ModeType::Magnetic) {
    const cplx ang = angular_term(j, j, m, mu, p);
    if (ang == 0.0)
      return 0.0;
    return ang * radial_function(radial, j, p.kr, cutoff) / std::sqrt(mode.k);
  }

  const double gamma = 1.0 / std::sqrt(mode.k * (2.0 * j + 1.0));
  cplx sum = 0.0;
  const cplx upper = angular_term(j + 1, j, m, mu, p);
  if (upper != 0.0)
    sum += std::sqrt(double(j)) * radial_function(radial, j + 1, p.kr, cutoff) *
           upper;
  const cplx lower = angular_term(j - 1, j, m, mu, p);
  if (lower != 0.0)
    sum -= std::sqrt(j + 1.0) * radial_function(radial, j - 1, p.kr, cutoff) *
           lower;
  return gamma * sum;
}

HelicityVector mode_vector(const ModeIndex &mode, const SpacePoint &p,
                           RadialKind radial, double cutoff) {
  return {mode_function(mode, 1, p, radial, cutoff),
          mode_function(mode, 0, p, radial, cutoff),
          mode_function(mode, -1, p, radial, cutoff)};
}

namespace {

HelicityVector scaled(const HelicityVector &v, cplx factor) {
  return {factor * v[1], factor * v[0], factor * v[-1]};
}

ModeIndex partner(const ModeIndex &mode) {
  return {mode.type == ModeType::Electric ? ModeType::Magnetic
                                          : ModeType::Electric,
          mode.k, mode.j, mode.m};
}

} // namespace

HelicityVector electric_field_mode(const ModeIndex &mode, const SpacePoint &p,
                                   RadialKind radial, double cutoff) {
  return scaled(mode_vector(mode, p, radial, cutoff), cplx(0.0, mode.k));
}

HelicityVector magnetic_field_mode(const ModeIndex &mode, const SpacePoint &p,
                                   RadialKind radial, double cutoff) {
  const cplx factor = mode.type == ModeType::Electric ? cplx(0.0, -mode.k)
                                                      : cplx(0.0, mode.k);
  return scaled(mode_vector(partner(mode), p, radial, cutoff), factor);
}

PlaneWaveMode::PlaneWaveMode(const Vec3 &k_vec_, int mu_)
    : k_vec(k_vec_), mu(mu_) {
  if (mu != 1 && mu != -1)
    throw std::invalid_argument(
        "plane waves carry helicity +1 or -1 only; mu = " + std::to_string(mu) +
        " is forbidden");
  if (!(k_vec.norm() > 0.0))
    throw std::invalid_argument("plane wave needs a non-zero wave vector");
}

std::array<Vec3, 3> PlaneWaveMode::frame() const {
  // (theta_hat, phi_hat, k_hat) of the propagation direction.
  const Vec3 n = k_vec.normalized();
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = (n.x() == 0.0 && n.y() == 0.0) ? 0.0 : std::atan2(n.y(), n.x());
  const Vec3 e1(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
                -std::sin(theta));
  const Vec3 e2(-std::sin(phi), std::cos(phi), 0.0);
  return {e1, e2, n};
}

Vec3c PlaneWaveMode::cartesian_at(const Vec3 &r) const {
  const auto [e1, e2, n] = frame();
  const cplx i(0.0, 1.0);
  const double s = -double(mu); // chi_{+-} = -+(e1 +- i e2)/sqrt2
  const Vec3c chi = s * kInvSqrt2 *
                    (e1.cast<cplx>() + double(mu) * i * e2.cast<cplx>());
  return std::polar(1.0, k_vec.dot(r)) * chi;
}

HelicityVector plane_wave_mode(const Vec3 &k_direction, int mu, const Vec3 &r,
                               double k) {
  const PlaneWaveMode mode(k * k_direction.normalized(), mu);
  HelicityVector out;
  out[mu] = std::polar(1.0, mode.k_vec.dot(r));
  return out;
}

} // namespace multipole
