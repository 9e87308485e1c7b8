#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace multipole {

using cplx = std::complex<double>;
using Vec3c = Eigen::Vector3cd;
using Vec3 = Eigen::Vector3d;

// Default atom radius cutoff k*r_a for outgoing-wave evaluations.
inline constexpr double kDefaultAtomCutoff = 1e-3;

/// Components of a complex 3-vector in the helicity basis
///   chi_{+1} = -(e_x + i e_y)/sqrt2,  chi_0 = e_z,  chi_{-1} = (e_x - i e_y)/sqrt2.
/// a_mu is the coefficient of chi_mu, so v = sum_mu a_mu chi_mu and
/// a_mu = conj(chi_mu) . v. Storage order is (+1, 0, -1).
class HelicityVector {
public:
  HelicityVector() = default;
  HelicityVector(cplx plus, cplx zero, cplx minus) : c_{plus, zero, minus} {}

  static constexpr int slot(int mu) { return 1 - mu; }

  cplx &operator[](int mu) { return c_[slot(mu)]; }
  const cplx &operator[](int mu) const { return c_[slot(mu)]; }

  double squared_norm() const;
  Vec3c to_cartesian() const;

  friend bool operator==(const HelicityVector &, const HelicityVector &) = default;

private:
  std::array<cplx, 3> c_{};
};

/// Lab-frame helicity unit vector chi_mu, mu in {-1, 0, +1}.
Vec3c helicity_unit(int mu);

HelicityVector helicity_from_cartesian(const Vec3c &v);

enum class ModeType { Electric, Magnetic };

enum class RadialKind {
  CavityStanding, // f_l = j_l(kr), real
  OutgoingWave    // f_l = h^(1)_l(kr)
};

struct ModeIndex {
  ModeType type = ModeType::Electric;
  double k = 1.0;
  int j = 1;
  int m = 0;

  // Validates k > 0, j >= 1, |m| <= j.
  ModeIndex(ModeType type, double k, int j, int m);
};

struct SpacePoint {
  double kr = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  // Validates kr >= 0 and 0 <= theta <= pi.
  SpacePoint(double kr, double theta, double phi);
};

/// Radial factor f_ell(kr) for the chosen boundary condition. Outgoing waves
/// throw std::domain_error below the atom cutoff.
cplx radial_function(RadialKind kind, int ell, double kr,
                     double cutoff = kDefaultAtomCutoff);

/// Multipole mode function V_{lambda k j m mu}(r) in units where
/// 2 pi hbar c / volume = 1, i.e.
///   gamma_E = 1/sqrt(k(2j+1)),   gamma_M = 1/sqrt(k).
/// Terms whose harmonic index |m - mu| exceeds ell contribute zero.
cplx mode_function(const ModeIndex &mode, int mu, const SpacePoint &p,
                   RadialKind radial, double cutoff = kDefaultAtomCutoff);

/// All three helicity components of V for one mode.
HelicityVector mode_vector(const ModeIndex &mode, const SpacePoint &p,
                           RadialKind radial,
                           double cutoff = kDefaultAtomCutoff);

/// Single-photon positive-frequency electric field amplitude of a mode:
///   Electric modes:  E_mu =  i k V_{E mu}
///   Magnetic modes:  E_mu =  i k V_{M mu}
HelicityVector electric_field_mode(const ModeIndex &mode, const SpacePoint &p,
                                   RadialKind radial,
                                   double cutoff = kDefaultAtomCutoff);

/// Magnetic induction amplitude, with the swapped pairing:
///   Electric modes:  B_mu = -i k V_{M mu}
///   Magnetic modes:  B_mu =  i k V_{E mu}
HelicityVector magnetic_field_mode(const ModeIndex &mode, const SpacePoint &p,
                                   RadialKind radial,
                                   double cutoff = kDefaultAtomCutoff);

/// Transverse plane-wave mode of wave vector k_vec and helicity mu = +-1.
struct PlaneWaveMode {
  Vec3 k_vec;
  int mu;

  // Throws std::invalid_argument for mu == 0 or a zero wave vector.
  PlaneWaveMode(const Vec3 &k_vec, int mu);

  // Transverse frame (e1, e2, k/|k|), right handed; for k along z it is
  // (e_x, e_y, e_z).
  std::array<Vec3, 3> frame() const;

  /// e^{i k.r} chi'_mu in Cartesian lab coordinates, chi' built on frame().
  Vec3c cartesian_at(const Vec3 &r) const;
};

/// Helicity components of a unit-amplitude plane wave relative to the frame
/// with chi_0 = k/|k|: only the mu slot is non-zero and equals e^{i k.r}.
/// Rejects mu == 0.
HelicityVector plane_wave_mode(const Vec3 &k_direction, int mu, const Vec3 &r,
                               double k = 1.0);

/// Complex contraction E . B = sum_mu (-1)^mu E_mu B_{-mu} (no conjugation).
cplx helicity_dot(const HelicityVector &a, const HelicityVector &b);

} // namespace multipole
