#pragma once

#include "multipole/field.hpp"
#include "multipole/polarization.hpp"

#include <Eigen/Dense>

namespace multipole::atom {

using polarization::PolarizationMatrix;

struct CouplingParams {
  double k0 = 1.0; // resonance wavenumber, omega_0 = c k0
  double k = 1.0;  // field wavenumber
  double D = 0.0;  // effective dipole factor, taken as given
};

/// g = k0 c / sqrt(k c) * D with c = 1. The same for every m channel.
double coupling_constant(const CouplingParams &p);
double coupling_constant(const CouplingParams &p, int m);

// ---------------------------------------------------------------------------
// Degenerate Jaynes-Cummings model on
//   {e_{+1}, e_0, e_{-1}, g} x |n_{+1}, n_0, n_{-1}>,  0 <= n_m <= n_max.

enum class AtomLevel { ExcitedPlus = 0, ExcitedZero = 1, ExcitedMinus = 2, Ground = 3 };

AtomLevel excited(int m);

struct JcBasis {
  int n_max = 1;

  explicit JcBasis(int n_max);
  int dim() const;
  /// Photon numbers are indexed by channel (+1, 0, -1).
  int index(AtomLevel a, int n_plus, int n_zero, int n_minus) const;
  /// Atom in `a`, n photons in channel m and none elsewhere.
  int index(AtomLevel a, int m, int n) const;
};

/// Rotating-wave Hamiltonian in units of hbar:
///   sum_m [omega a_m^+ a_m + omega0 R_mm] + g sum_m [R_mg a_m + a_m^+ R_gm]
/// with R_mg = |e_m><g|. Real symmetric.
Eigen::MatrixXd jc_hamiltonian(double g, double omega, double omega0,
                               int n_max);

/// Restriction of H to channel m: atom in {e_m, g}, photons only in mode m.
/// Basis order: (g, 0), (e_m, 0), (g, 1), (e_m, 1), ... up to n_max. The
/// subspace is invariant under H.
Eigen::MatrixXd channel_block(const Eigen::MatrixXd &H, const JcBasis &basis,
                              int m);

/// 2x2 block on {|e_m; 0>, |g; 1_m>}.
Eigen::Matrix2d single_excitation_block(const Eigen::MatrixXd &H,
                                        const JcBasis &basis, int m);

struct DipoleAtomState {
  JcBasis basis;
  Eigen::VectorXcd amp;

  double norm() const { return amp.norm(); }
  cplx excited_amplitude(int m) const;      // <e_m; 0|psi>
  cplx photon_amplitude(int m) const;       // <g; 1_m|psi>
};

/// Resonant dressed state started from |e_m; 0>, in the frame rotating at
/// omega0: <e_m;0|psi> = cos(gt), <g;1_m|psi> = -i sin(gt).
DipoleAtomState evolve_dressed(double g, double t, int m, int n_max = 1);

/// 2 sin^2(gt), i.e. 1 - cos(2gt).
double rabi_factor(double g, double t);

struct DecayParams {
  double eta = 0.0;          // decay rate
  double delta_omega = 0.0;  // level shift
  double omega_k = 1.0;
  double omega_0 = 1.0;
};

/// 1 - 2 exp(-eta t/2) cos[(omega_k - omega_0 - delta_omega) t] + exp(-eta t).
/// Throws std::invalid_argument for eta < 0 or t < 0.
double ww_factor(const DecayParams &p, double t);

// ---------------------------------------------------------------------------
// Single-photon electric dipole polarization matrices, helicity basis, in
// units of hbar omega / 3V. With 2 pi hbar c / V = 1 that unit is k / (6 pi),
// so the matrices are (6 pi / k) times the polarization matrix of the mode's
// field amplitudes.

enum class Direction { Polar, Equatorial };

struct EmissionGeometry {
  int m = 1;
  Direction direction = Direction::Equatorial;
  double phi = 0.0;
  double kr = 1.0;
  RadialKind boundary = RadialKind::CavityStanding;
  double cutoff = kDefaultAtomCutoff;

  /// Throws std::invalid_argument for bad m or kr, std::domain_error when an
  /// outgoing-wave kr lies below the cutoff.
  void validate() const;
  double theta() const;
};

/// Radial inputs to the closed forms. A standing wave has jm1 = jm3 = 0.
struct RadialChannels {
  double j0 = 0.0;
  double j2 = 0.0;
  double jm1 = 0.0;
  double jm3 = 0.0;

  static RadialChannels at(double kr, RadialKind boundary);
  double gamma_plus() const { return 0.25 * j2 + j0; }
  double gamma_minus() const { return 0.25 * jm3 + jm1; }
  double xi_plus() const { return 0.5 * j2 - j0; }
  double xi_minus() const { return 0.5 * jm3 - jm1; }
  /// Real and imaginary parts of the (+,-) amplitude product.
  double cross_re() const { return gamma_plus() * j2 + gamma_minus() * jm3; }
  double cross_im() const { return gamma_minus() * j2 - gamma_plus() * jm3; }
};

/// Closed-form matrix for m = +1 or -1 from radial channels.
PolarizationMatrix dipole_pol_matrix_closed(int m, Direction direction,
                                            double phi,
                                            const RadialChannels &c);

/// General path: dyadic of the j = 1 electric mode amplitudes at the point.
PolarizationMatrix dipole_pol_matrix_dyadic(const EmissionGeometry &geom);

/// Standing waves in an ideal cavity. m = 0 goes through the dyadic path.
PolarizationMatrix dipole_pol_matrix_cavity(const EmissionGeometry &geom);
/// Outgoing waves in free space. m = 0 goes through the dyadic path.
PolarizationMatrix dipole_pol_matrix_freespace(const EmissionGeometry &geom);
/// Dispatches on geom.boundary.
PolarizationMatrix dipole_pol_matrix(const EmissionGeometry &geom);

/// Phase of the (+,-) element. For m = +-1 this is
///   2 phi + pi +- arctan(cross_im / cross_re)
/// with the principal arctan, i.e. the phase modulo pi; for a standing wave
/// it is the constant 2 phi + pi. For m = 0 it is the argument of the
/// element. NaN where the element or the arctan is undefined.
double cross_term_phase(const EmissionGeometry &geom);

/// mu = m, found as the dominant helicity component of the j = 1 electric
/// mode at small kr.
int emission_selection_rule(int m);

/// |V_{E k 1 m mu}| / |V_{E k 1 m m}| at the given kr and direction.
double off_selection_ratio(int m, int mu, double kr = 1e-3,
                           double theta = 1.0, double phi = 0.3);

} // namespace multipole::atom
