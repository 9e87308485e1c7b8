#pragma once

#include "multipole/field.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>

namespace multipole::polarization {

using Mat3c = Eigen::Matrix3cd;
using Mat4c = Eigen::Matrix4cd;

enum class Basis { Cartesian, Helicity };

/// Positive-frequency field amplitudes at one point (Cartesian components).
struct FieldSnapshot {
  Vec3c E = Vec3c::Zero();
  Vec3c B = Vec3c::Zero();
};

/// 4x4 antisymmetric field-strength tensor
///   [  0    Ex   Ey   Ez ]
///   [ -Ex   0   -Bz   By ]
///   [ -Ey   Bz   0   -Bx ]
///   [ -Ez  -By   Bx   0  ]
struct FieldStrengthTensor {
  Mat4c F = Mat4c::Zero();
};

/// 3x3 polarization matrix with entry (i, j) = conj(E_i) E_j. Helicity rows
/// and columns are ordered (+1, 0, -1).
struct PolarizationMatrix {
  Mat3c m = Mat3c::Zero();
  Basis basis = Basis::Cartesian;

  PolarizationMatrix to(Basis target) const;
  cplx operator()(int row, int col) const { return m(row, col); }
  /// Entry addressed by helicity labels; requires basis == Helicity.
  cplx helicity(int mu, int nu) const;

  double trace() const { return m.trace().real(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  PolarizationMatrix operator+(const PolarizationMatrix &o) const;
};

/// Fixed unitary W with P_helicity = W P_cartesian W^dagger; row mu is
/// (-1)^mu chi_mu^T.
const Mat3c &helicity_transform();

struct BilinearDecomposition {
  double W_E = 0.0;           // E^dagger E
  Vec3c S = Vec3c::Zero();    // first row of R beyond (0,0); Poynting-like
  PolarizationMatrix P;       // lower-right 3x3 block, Cartesian
};

FieldStrengthTensor field_tensor(const FieldSnapshot &s);

/// R = F^dagger F split into its scalar, vector and 3x3 blocks.
BilinearDecomposition bilinear_R(const FieldStrengthTensor &F);

/// Electric polarization matrix, entries conj(E_i) E_j. In the helicity
/// basis the entries carry the sign pattern (-1)^{mu+nu}.
PolarizationMatrix pol_matrix_electric(const Vec3c &E,
                                       Basis basis = Basis::Cartesian);
/// Helicity-basis matrix straight from helicity components.
PolarizationMatrix pol_matrix_electric(const HelicityVector &E);

/// Magnetic polarization matrix:
///   diag: |B_y|^2+|B_z|^2, |B_x|^2+|B_z|^2, |B_x|^2+|B_y|^2
///   off-diagonal (i, j): -conj(B_j) B_i
PolarizationMatrix pol_matrix_magnetic(const Vec3c &B,
                                       Basis basis = Basis::Cartesian);

struct PhaseDifferences {
  // arg E_i - arg E_j wrapped to (-pi, pi]; empty when either component is 0.
  std::optional<double> xy;
  std::optional<double> yz;
  std::optional<double> zx;

  bool all_defined() const { return xy && yz && zx; }
};

PhaseDifferences phase_differences(const Vec3c &E);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

/// Vacuum (commutator) polarization of a set of modes. Matrices are in the
/// energy-density units of the vacuum module: the trace of `electric` equals
/// the zero-point density of the same mode set, and plane waves give 1/2 per
/// mode.
struct VacuumPolarization {
  PolarizationMatrix electric; // helicity basis
  PolarizationMatrix magnetic; // helicity basis
  PolarizationMatrix total() const { return electric + magnetic; }
};

VacuumPolarization vacuum_polarization(std::span<const ModeIndex> modes,
                                       const SpacePoint &p, RadialKind radial,
                                       double cutoff = kDefaultAtomCutoff);

VacuumPolarization vacuum_polarization(std::span<const PlaneWaveMode> modes,
                                       const Vec3 &r);

/// Diagnostic E . B for one mode's amplitudes, sum_mu (-1)^mu E_mu B_{-mu}.
cplx mode_e_dot_b(const ModeIndex &mode, const SpacePoint &p,
                  RadialKind radial, double cutoff = kDefaultAtomCutoff);

} // namespace multipole::polarization
