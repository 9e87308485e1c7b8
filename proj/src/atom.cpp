#include "multipole/atom.hpp"

#include "multipole/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace multipole::atom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_channel(int m) {
  if (m < -1 || m > 1)
    throw std::invalid_argument("dipole channel m must be -1, 0 or +1, got " +
                                std::to_string(m));
}

int slot(int mu) { return HelicityVector::slot(mu); }

// Index of m in the (+1, 0, -1) photon triple.
int channel_slot(int m) { return 1 - m; }

} // namespace

double coupling_constant(const CouplingParams &p) {
  if (!(p.k0 > 0.0) || !(p.k > 0.0))
    throw std::invalid_argument("coupling_constant: k0 and k must be positive");
  return p.k0 / std::sqrt(p.k) * p.D;
}

double coupling_constant(const CouplingParams &p, int m) {
  check_channel(m);
  return coupling_constant(p);
}

AtomLevel excited(int m) {
  check_channel(m);
  return static_cast<AtomLevel>(channel_slot(m));
}

JcBasis::JcBasis(int n) : n_max(n) {
  if (n_max < 1)
    throw std::invalid_argument("JcBasis: n_max must be >= 1");
}

int JcBasis::dim() const {
  const int N = n_max + 1;
  return 4 * N * N * N;
}

int JcBasis::index(AtomLevel a, int n_plus, int n_zero, int n_minus) const {
  const int N = n_max + 1;
  for (int n : {n_plus, n_zero, n_minus})
    if (n < 0 || n > n_max)
      throw std::out_of_range("JcBasis: photon number outside [0, n_max]");
  return ((static_cast<int>(a) * N + n_plus) * N + n_zero) * N + n_minus;
}

int JcBasis::index(AtomLevel a, int m, int n) const {
  check_channel(m);
  int occ[3] = {0, 0, 0};
  occ[channel_slot(m)] = n;
  return index(a, occ[0], occ[1], occ[2]);
}

Eigen::MatrixXd jc_hamiltonian(double g, double omega, double omega0,
                               int n_max) {
  const JcBasis basis(n_max);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
  for (int a = 0; a < 4; ++a)
    for (int np = 0; np <= n_max; ++np)
      for (int n0 = 0; n0 <= n_max; ++n0)
        for (int nm = 0; nm <= n_max; ++nm) {
          const auto level = static_cast<AtomLevel>(a);
          const int i = basis.index(level, np, n0, nm);
          H(i, i) = omega * (np + n0 + nm) +
                    (level == AtomLevel::Ground ? 0.0 : omega0);
          if (level != AtomLevel::Ground)
            continue;
          // R_mg a_m : |g; n_m> -> sqrt(n_m) |e_m; n_m - 1>
          const int occ[3] = {np, n0, nm};
          for (int s = 0; s < 3; ++s) {
            if (occ[s] == 0)
              continue;
            int lowered[3] = {np, n0, nm};
            --lowered[s];
            const int j = basis.index(static_cast<AtomLevel>(s), lowered[0],
                                      lowered[1], lowered[2]);
            const double amp = g * std::sqrt(double(occ[s]));
            H(j, i) += amp;
            H(i, j) += amp;
          }
        }
  return H;
}

Eigen::MatrixXd channel_block(const Eigen::MatrixXd &H, const JcBasis &basis,
                              int m) {
  const int n = 2 * (basis.n_max + 1);
  if (H.rows() != basis.dim() || H.cols() != basis.dim())
    throw std::invalid_argument("channel_block: matrix does not match basis");
  std::vector<int> idx;
  idx.reserve(n);
  for (int k = 0; k <= basis.n_max; ++k) {
    idx.push_back(basis.index(AtomLevel::Ground, m, k));
    idx.push_back(basis.index(excited(m), m, k));
  }
  Eigen::MatrixXd out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out(r, c) = H(idx[r], idx[c]);
  return out;
}

Eigen::Matrix2d single_excitation_block(const Eigen::MatrixXd &H,
                                        const JcBasis &basis, int m) {
  const int e = basis.index(excited(m), m, 0);
  const int p = basis.index(AtomLevel::Ground, m, 1);
  Eigen::Matrix2d out;
  out << H(e, e), H(e, p), H(p, e), H(p, p);
  return out;
}

cplx DipoleAtomState::excited_amplitude(int m) const {
  return amp(basis.index(excited(m), m, 0));
}

cplx DipoleAtomState::photon_amplitude(int m) const {
  return amp(basis.index(AtomLevel::Ground, m, 1));
}

DipoleAtomState evolve_dressed(double g, double t, int m, int n_max) {
  DipoleAtomState s{JcBasis(n_max), {}};
  s.amp = Eigen::VectorXcd::Zero(s.basis.dim());
  // (1/2) sum_{l=+-1} e^{-i l g t} (|e_m;0> + l |g;1_m>)
  s.amp(s.basis.index(excited(m), m, 0)) = std::cos(g * t);
  s.amp(s.basis.index(AtomLevel::Ground, m, 1)) = cplx(0.0, -std::sin(g * t));
  return s;
}

double rabi_factor(double g, double t) {
  const double s = std::sin(g * t);
  return 2.0 * s * s;
}

double ww_factor(const DecayParams &p, double t) {
  if (!(p.eta >= 0.0))
    throw std::invalid_argument("ww_factor: eta must be non-negative");
  if (!(t >= 0.0))
    throw std::invalid_argument("ww_factor: t must be non-negative");
  const double detune = p.omega_k - p.omega_0 - p.delta_omega;
  return 1.0 - 2.0 * std::exp(-0.5 * p.eta * t) * std::cos(detune * t) +
         std::exp(-p.eta * t);
}

void EmissionGeometry::validate() const {
  check_channel(m);
  if (!std::isfinite(kr) || kr < 0.0)
    throw std::invalid_argument("emission geometry: kr must be finite and >= 0");
  if (!std::isfinite(phi))
    throw std::invalid_argument("emission geometry: phi must be finite");
  if (boundary == RadialKind::OutgoingWave) {
    if (!(cutoff > 0.0))
      throw std::invalid_argument("emission geometry: cutoff must be positive");
    if (kr < cutoff)
      throw std::domain_error("free-space emission at kr = " +
                              std::to_string(kr) + " lies inside the atom "
                              "cutoff " + std::to_string(cutoff));
  }
}

double EmissionGeometry::theta() const {
  return direction == Direction::Polar ? 0.0 : 0.5 * std::numbers::pi;
}

RadialChannels RadialChannels::at(double kr, RadialKind boundary) {
  RadialChannels c;
  c.j0 = specfun::spherical_bessel_j(0, kr);
  c.j2 = specfun::spherical_bessel_j(2, kr);
  if (boundary == RadialKind::OutgoingWave) {
    c.jm1 = specfun::spherical_bessel_j(-1, kr);
    c.jm3 = specfun::spherical_bessel_j(-3, kr);
  }
  return c;
}

namespace {

// m = +1 closed form.
polarization::Mat3c closed_plus(Direction direction, double phi,
                                const RadialChannels &c) {
  polarization::Mat3c P = polarization::Mat3c::Zero();
  if (direction == Direction::Polar) {
    P(slot(1), slot(1)) = c.xi_plus() * c.xi_plus() + c.xi_minus() * c.xi_minus();
    return P;
  }
  const double gp = c.gamma_plus();
  const double gm = c.gamma_minus();
  P(slot(1), slot(1)) = gp * gp + gm * gm;
  P(slot(-1), slot(-1)) = 9.0 / 16.0 * (c.j2 * c.j2 + c.jm3 * c.jm3);
  const cplx cross =
      -0.75 * cplx(c.cross_re(), c.cross_im()) * std::polar(1.0, 2.0 * phi);
  P(slot(1), slot(-1)) = cross;
  P(slot(-1), slot(1)) = std::conj(cross);
  return P;
}

} // namespace

PolarizationMatrix dipole_pol_matrix_closed(int m, Direction direction,
                                            double phi,
                                            const RadialChannels &c) {
  if (m != 1 && m != -1)
    throw std::invalid_argument("closed-form dipole matrix needs m = +1 or -1");
  if (m == 1)
    return {closed_plus(direction, phi, c), polarization::Basis::Helicity};
  // P_{-1}[-mu][-nu](phi) = (-1)^{mu+nu} P_{+1}[mu][nu](-phi)
  const auto Pp = closed_plus(direction, -phi, c);
  polarization::Mat3c P;
  for (int mu = -1; mu <= 1; ++mu)
    for (int nu = -1; nu <= 1; ++nu) {
      const double sign = ((mu + nu) % 2 == 0) ? 1.0 : -1.0;
      P(slot(-mu), slot(-nu)) = sign * Pp(slot(mu), slot(nu));
    }
  return {P, polarization::Basis::Helicity};
}

PolarizationMatrix dipole_pol_matrix_dyadic(const EmissionGeometry &geom) {
  geom.validate();
  const ModeIndex mode(ModeType::Electric, 1.0, 1, geom.m);
  const SpacePoint p(geom.kr, geom.theta(), geom.phi);
  const auto E = electric_field_mode(mode, p, geom.boundary, geom.cutoff);
  auto P = polarization::pol_matrix_electric(E);
  P.m *= 6.0 * std::numbers::pi / mode.k;
  return P;
}

PolarizationMatrix dipole_pol_matrix_cavity(const EmissionGeometry &geom) {
  if (geom.boundary != RadialKind::CavityStanding)
    throw std::invalid_argument("cavity matrix needs standing-wave boundary");
  geom.validate();
  if (geom.m == 0)
    return dipole_pol_matrix_dyadic(geom);
  return dipole_pol_matrix_closed(geom.m, geom.direction, geom.phi,
                                  RadialChannels::at(geom.kr, geom.boundary));
}

PolarizationMatrix dipole_pol_matrix_freespace(const EmissionGeometry &geom) {
  if (geom.boundary != RadialKind::OutgoingWave)
    throw std::invalid_argument("free-space matrix needs outgoing-wave boundary");
  geom.validate();
  if (geom.m == 0)
    return dipole_pol_matrix_dyadic(geom);
  return dipole_pol_matrix_closed(geom.m, geom.direction, geom.phi,
                                  RadialChannels::at(geom.kr, geom.boundary));
}

PolarizationMatrix dipole_pol_matrix(const EmissionGeometry &geom) {
  return geom.boundary == RadialKind::CavityStanding
             ? dipole_pol_matrix_cavity(geom)
             : dipole_pol_matrix_freespace(geom);
}

double cross_term_phase(const EmissionGeometry &geom) {
  geom.validate();
  if (geom.m == 0) {
    const auto P = dipole_pol_matrix_dyadic(geom);
    const cplx x = P.helicity(1, -1);
    const double scale = std::abs(P.trace());
    if (!(std::abs(x) > 1e-14 * scale))
      return kNaN;
    return std::arg(x);
  }
  if (geom.direction == Direction::Polar)
    return kNaN;
  const auto c = RadialChannels::at(geom.kr, geom.boundary);
  const double re = c.cross_re();
  if (re == 0.0)
    return kNaN;
  return 2.0 * geom.phi + std::numbers::pi +
         geom.m * std::atan(c.cross_im() / re);
}

double off_selection_ratio(int m, int mu, double kr, double theta, double phi) {
  check_channel(m);
  check_channel(mu);
  const ModeIndex mode(ModeType::Electric, 1.0, 1, m);
  const SpacePoint p(kr, theta, phi);
  const auto V = mode_vector(mode, p, RadialKind::CavityStanding);
  return std::abs(V[mu]) / std::abs(V[m]);
}

int emission_selection_rule(int m) {
  check_channel(m);
  const ModeIndex mode(ModeType::Electric, 1.0, 1, m);
  const auto V = mode_vector(mode, SpacePoint(1e-3, 1.0, 0.3),
                             RadialKind::CavityStanding);
  int best = 1;
  for (int mu = 0; mu >= -1; --mu)
    if (std::abs(V[mu]) > std::abs(V[best]))
      best = mu;
  return best;
}

} // namespace multipole::atom
